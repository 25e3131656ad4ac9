#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "levyshuffle/json_io.hpp"
#include "levyshuffle/moments.hpp"
#include "levyshuffle/special_numbers.hpp"
#include "levyshuffle/tensor_poly.hpp"

using namespace levyshuffle;

TEST_CASE("contraction moments for small orders") {
  CHECK(moment_by_contraction(0) == 1);
  CHECK(moment_by_contraction(2) == Rational(1, 4));
  CHECK(moment_by_contraction(3) == 0);
  CHECK(moment_by_contraction(4) == Rational(5, 16));
}

TEST_CASE("closed-form moments") {
  CHECK(moment_closed_form(0) == 1);
  CHECK(moment_closed_form(2) == Rational(1, 4));
  CHECK(moment_closed_form(4) == Rational(5, 16));
  CHECK(moment_closed_form(6) == Rational(61, 64));
  for (int n = 1; n <= 7; n += 2) CHECK(moment_closed_form(n) == 0);
}

TEST_CASE("four routes agree exactly through order 6") {
  for (int n = 0; n <= 6; ++n) {
    const MomentReport report = moment_report(n);
    CHECK(report.agreement);
    CHECK(report.contraction == report.closed_form);
    CHECK(report.letter_matching == report.closed_form);
    CHECK(report.exponential == report.closed_form);
  }
}

TEST_CASE("odd moments vanish along every route") {
  for (int n : {1, 3, 5}) {
    CHECK(moment_by_contraction(n) == 0);
    CHECK(moment_by_letter_matchings(n) == 0);
    CHECK(moment_by_exponential_formula(n) == 0);
    CHECK(moment_closed_form(n) == 0);
  }
}

TEST_CASE("only paired balanced words survive the contraction") {
  const TensorPoly powered = shuffle_power(area_tensor(), 3);
  for (const auto& [w, c] : powered.terms()) CHECK(w.balanced());
  // pair words with unequal letter counts pair to zero
  CHECK(pairing(powered, TensorPoly::monomial(Word::parse("xxxxxx"))) == 0);
  CHECK(pairing(powered, TensorPoly::monomial(Word::parse("xxxxyy"))) == 0);
}

TEST_CASE("contraction resource guard") {
  CHECK_THROWS_AS(moment_by_contraction(9, 8), std::out_of_range);
  CHECK_NOTHROW(moment_by_contraction(3, 3));
  CHECK_THROWS_AS(moment_by_contraction(-1), std::invalid_argument);
}

TEST_CASE("scale parsing") {
  CHECK(parse_scale("1").coefficient == 1);
  CHECK(parse_scale("1").pi_power == 0);
  CHECK(parse_scale("3/2").coefficient == Rational(3, 2));
  CHECK(parse_scale("pi").pi_power == 1);
  CHECK(parse_scale("2pi").coefficient == 2);
  CHECK(parse_scale("2pi").pi_power == 1);
  CHECK(parse_scale("1/2 pi").coefficient == Rational(1, 2));
  CHECK_THROWS_AS(parse_scale(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_scale("-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scale("bogus"), std::invalid_argument);
}

TEST_CASE("scaled moments carry pi symbolically") {
  const PiScaled unit = parse_scale("1");
  CHECK(scaled_moment(2, unit).coefficient == Rational(1, 4));
  CHECK(scaled_moment(2, unit).pi_power == 0);

  const PiScaled two_pi = parse_scale("2pi");
  const PiScaled m2 = scaled_moment(2, two_pi);
  CHECK(m2.coefficient == 1);  // (2/2)^2 E_2
  CHECK(m2.pi_power == 2);
  const PiScaled m4 = scaled_moment(4, two_pi);
  CHECK(m4.coefficient == 5);
  CHECK(m4.pi_power == 4);
}

TEST_CASE("scaling is exactly T^n for rational horizons") {
  for (const char* scale : {"2", "3/2", "7"}) {
    const PiScaled horizon = parse_scale(scale);
    for (int n = 0; n <= 6; n += 2) {
      Rational t_power = 1;
      for (int k = 0; k < n; ++k) t_power *= horizon.coefficient;
      CHECK(scaled_moment(n, horizon).coefficient == t_power * moment_closed_form(n));
    }
  }
}

TEST_CASE("characteristic function partial sums") {
  CHECK(charfn_partial_sum(0.0, 12) == 1.0);
  CHECK(charfn_reference(0.0) == 1.0);
  CHECK(charfn_reference(0.25) == doctest::Approx(0.754940).epsilon(1e-5));
  CHECK(charfn_reference(0.5) == doctest::Approx(0.398536).epsilon(1e-5));

  // The series alternates with (eventually) decreasing terms for |z| < 1/2,
  // so the truncation error is at most the first omitted term. Assert that
  // bound and the monotone accuracy improvement it implies.
  const auto euler = euler_numbers(48);
  auto term = [&](double z, int m) {
    const double w = 3.14159265358979323846 * z;
    return to_double(Rational(euler[static_cast<std::size_t>(2 * m)],
                              factorial(static_cast<unsigned>(2 * m)))) *
           std::pow(w, 2 * m);
  };
  for (double z : {0.1, 0.25, 0.4}) {
    const double exact = charfn_reference(z);
    double previous_error = -1.0;
    for (int n_terms = 8; n_terms <= 24; n_terms += 2) {
      const double error = std::abs(charfn_partial_sum(z, n_terms) - exact);
      CHECK(error <= term(z, n_terms / 2 + 1) + 1e-14);  // + double rounding floor
      if (previous_error >= 0.0) CHECK(error <= previous_error + 1e-14);
      previous_error = error;
    }
  }

  // spot values: the z = 0.25 sum is 1e-6-accurate by N = 20 (not by N = 12);
  // near the convergence edge the geometric rate (2z)^2 = 0.64 needs N = 44
  CHECK(std::abs(charfn_partial_sum(0.25, 20) - charfn_reference(0.25)) < 1e-6);
  CHECK(std::abs(charfn_partial_sum(0.25, 12) - charfn_reference(0.25)) < 1e-4);
  CHECK(std::abs(charfn_partial_sum(0.4, 44) - charfn_reference(0.4)) < 1e-4);
}

TEST_CASE("moment table json rows") {
  const MomentTable table = compute_moment_table(4, parse_scale("2pi"));
  CHECK(table.all_agree);
  const nlohmann::json j = to_json(table);
  CHECK(j["agreement"] == true);
  REQUIRE(j["rows"].size() == 5);
  const auto& row2 = j["rows"][2];
  CHECK(row2["n"] == 2);
  CHECK(row2["exact"] == "1");
  CHECK(row2["pi_power"] == 2);
  CHECK(row2["routes"]["contraction"] == "1");
  CHECK(row2["routes"]["xy_matching"] == "1");
  CHECK(row2["routes"]["XY_exponential"] == "1");
  CHECK(row2["routes"]["closed_form"] == "1");
  const auto& row4 = j["rows"][4];
  CHECK(row4["exact"] == "5");
  CHECK(row4["pi_power"] == 4);
}
