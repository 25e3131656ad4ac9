#include "levyshuffle/moments.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "levyshuffle/matchings.hpp"
#include "levyshuffle/special_numbers.hpp"
#include "levyshuffle/tensor_poly.hpp"

namespace levyshuffle {

namespace {

// 4^{-n} / n!, the factor turning the even-word coefficient total into E[A^n].
Rational contraction_factor(int n) {
  return Rational(1, int_pow2(static_cast<unsigned>(2 * n)) * factorial(static_cast<unsigned>(n)));
}

}  // namespace

Rational moment_by_contraction(int n, int n_limit) {
  if (n < 0) throw std::invalid_argument("moment_by_contraction: negative order");
  if (n > n_limit) throw std::out_of_range("moment_by_contraction: order beyond configured limit");
  const TensorPoly powered = shuffle_power(area_tensor(), n);
  const Rational paired = pairing(powered, tensor_power_diag(n));
  return paired * contraction_factor(n);
}

Rational moment_by_letter_matchings(int n) {
  if (n < 0) throw std::invalid_argument("moment_by_letter_matchings: negative order");
  return Rational(even_total_by_matchings(n)) * contraction_factor(n);
}

Rational moment_by_exponential_formula(int n) {
  if (n < 0) throw std::invalid_argument("moment_by_exponential_formula: negative order");
  if (n % 2 != 0) return 0;  // no even words at odd pair counts
  return Rational(even_total_by_exponential_formula(n / 2)) * contraction_factor(n);
}

Rational moment_closed_form(int n) {
  if (n < 0) throw std::invalid_argument("moment_closed_form: negative order");
  const Integer e_n = euler_numbers(n)[static_cast<std::size_t>(n)];
  return Rational(e_n, int_pow2(static_cast<unsigned>(n)));
}

MomentReport moment_report(int n, int n_limit) {
  MomentReport report;
  report.n = n;
  report.contraction = moment_by_contraction(n, n_limit);
  report.letter_matching = moment_by_letter_matchings(n);
  report.exponential = moment_by_exponential_formula(n);
  report.closed_form = moment_closed_form(n);
  report.agreement = report.contraction == report.closed_form &&
                     report.letter_matching == report.closed_form &&
                     report.exponential == report.closed_form;
  return report;
}

PiScaled parse_scale(const std::string& text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  if (compact.empty()) throw std::invalid_argument("parse_scale: empty scale");
  PiScaled out;
  if (compact.size() >= 2 && compact.substr(compact.size() - 2) == "pi") {
    out.pi_power = 1;
    compact.resize(compact.size() - 2);
    if (compact.empty() || compact == "+") compact = "1";
  }
  out.coefficient = parse_rational(compact);
  if (out.coefficient <= 0) throw std::invalid_argument("parse_scale: horizon must be positive");
  return out;
}

PiScaled scaled_moment(int n, const PiScaled& horizon) {
  if (horizon.coefficient <= 0) throw std::invalid_argument("scaled_moment: horizon must be positive");
  PiScaled out;
  const Rational half = horizon.coefficient / 2;
  Rational power = 1;
  for (int k = 0; k < n; ++k) power *= half;
  out.coefficient = power * Rational(euler_numbers(n)[static_cast<std::size_t>(n)]);
  out.pi_power = horizon.pi_power * n;
  return out;
}

MomentTable compute_moment_table(int n_max, const PiScaled& horizon, int n_limit) {
  if (n_max < 0) throw std::invalid_argument("compute_moment_table: negative n_max");
  MomentTable table;
  table.horizon = horizon;
  table.all_agree = true;
  for (int n = 0; n <= n_max; ++n) {
    table.rows.push_back(moment_report(n, n_limit));
    table.all_agree = table.all_agree && table.rows.back().agreement;
  }
  return table;
}

double charfn_partial_sum(double z, int n_terms) {
  if (n_terms < 0) throw std::invalid_argument("charfn_partial_sum: negative term count");
  const std::vector<Integer> euler = euler_numbers(n_terms);
  const double w = 3.14159265358979323846 * z;
  double sum = 0.0;
  double w_power = 1.0;  // w^{2m}
  for (int m = 0; 2 * m <= n_terms; ++m) {
    const int n = 2 * m;
    const Rational coeff =
        Rational(euler[static_cast<std::size_t>(n)], factorial(static_cast<unsigned>(n)));
    const double term = to_double(coeff) * w_power;
    sum += (m % 2 == 0) ? term : -term;
    w_power *= w * w;
  }
  return sum;
}

double charfn_reference(double z) { return 1.0 / std::cosh(3.14159265358979323846 * z); }

}  // namespace levyshuffle
