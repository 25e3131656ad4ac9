#include "levyshuffle/special_numbers.hpp"

#include <stdexcept>

#include "levyshuffle/matchings.hpp"
#include "levyshuffle/series.hpp"

namespace levyshuffle {

namespace {

Integer series_coefficient_times_factorial(const PowerSeries& s, int n) {
  const Rational value = s[n] * Rational(factorial(static_cast<unsigned>(n)));
  if (denominator(value) != 1)
    throw std::logic_error("expected an integer series coefficient");
  return numerator(value);
}

}  // namespace

std::vector<Integer> euler_numbers(int n_max) {
  if (n_max < 0) throw std::invalid_argument("euler_numbers: negative bound");
  const PowerSeries sec = reciprocal(cosine_series(n_max));
  std::vector<Integer> out(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n)
    out[static_cast<std::size_t>(n)] = series_coefficient_times_factorial(sec, n);
  return out;
}

std::vector<Integer> tangent_numbers(int r_max) {
  if (r_max < 1) throw std::invalid_argument("tangent_numbers: need r_max >= 1");
  const int degree = 2 * r_max - 1;
  const PowerSeries tan = multiply(sine_series(degree), reciprocal(cosine_series(degree)));
  std::vector<Integer> out(static_cast<std::size_t>(r_max));
  for (int r = 1; r <= r_max; ++r)
    out[static_cast<std::size_t>(r - 1)] = series_coefficient_times_factorial(tan, 2 * r - 1);
  return out;
}

std::vector<Integer> eulerian_row(int t) {
  if (t < 1) throw std::invalid_argument("eulerian_row: need t >= 1");
  std::vector<Integer> row{1};  // t = 1
  for (int cur = 2; cur <= t; ++cur) {
    std::vector<Integer> next(static_cast<std::size_t>(cur));
    for (int d = 0; d < cur; ++d) {
      Integer value = 0;
      if (d < cur - 1) value += Integer(d + 1) * row[static_cast<std::size_t>(d)];
      if (d > 0) value += Integer(cur - d) * row[static_cast<std::size_t>(d - 1)];
      next[static_cast<std::size_t>(d)] = value;
    }
    row = std::move(next);
  }
  return row;
}

Integer alternating_eulerian_sum(int r) {
  if (r < 1) throw std::invalid_argument("alternating_eulerian_sum: need r >= 1");
  const std::vector<Integer> row = eulerian_row(2 * r - 1);
  Integer sum = 0;
  for (std::size_t d = 0; d < row.size(); ++d)
    sum += (d % 2 == 0) ? row[d] : -row[d];
  const Integer tangent = tangent_numbers(r)[static_cast<std::size_t>(r - 1)];
  const Integer expected = (r % 2 == 1) ? tangent : -tangent;
  if (sum != expected)
    throw std::logic_error("alternating Eulerian sum disagrees with the tangent number");
  return sum;
}

SingleCycleCount signed_single_cycle_count(int r) {
  if (r < 1) throw std::invalid_argument("signed_single_cycle_count: need r >= 1");
  SingleCycleCount count{0, 0};
  for (const auto& d : block_matchings_of_length(2 * r)) {
    if (d.cycles() != 1) continue;
    count.total += d.sign();
    if (d.word.at(0) == Letter::x) count.starting_with_x += d.sign();
  }
  const Integer tangent = tangent_numbers(r)[static_cast<std::size_t>(r - 1)];
  if (count.total != 2 * tangent)
    throw std::logic_error("single-cycle signed count disagrees with 2 T_r");
  return count;
}

Integer even_total_by_exponential_formula(int m) {
  if (m < 0) throw std::invalid_argument("even_total_by_exponential_formula: negative m");
  if (m == 0) return 1;
  const std::vector<Integer> tangents = tangent_numbers(m);
  std::vector<Integer> single_cycle(static_cast<std::size_t>(m) + 1);
  for (int r = 1; r <= m; ++r)
    single_cycle[static_cast<std::size_t>(r)] = 2 * tangents[static_cast<std::size_t>(r - 1)];

  Rational sum = 0;
  std::vector<int> multiplicity(static_cast<std::size_t>(m) + 1, 0);
  // Walk every multiplicity vector (a_1..a_m) with sum r*a_r = m.
  auto recurse = [&](auto&& self, int r, int remaining) -> void {
    if (r > m || remaining == 0) {
      if (remaining != 0) return;
      Rational term = Rational(factorial(static_cast<unsigned>(2 * m)));
      for (int k = 1; k <= m; ++k) {
        const int a = multiplicity[static_cast<std::size_t>(k)];
        if (a == 0) continue;
        for (int rep = 0; rep < a; ++rep) {
          term /= Rational(factorial(static_cast<unsigned>(2 * k)));
          term *= Rational(single_cycle[static_cast<std::size_t>(k)]);
          term /= 2;
        }
        term /= Rational(factorial(static_cast<unsigned>(a)));
      }
      sum += term;
      return;
    }
    for (int a = 0; a * r <= remaining; ++a) {
      multiplicity[static_cast<std::size_t>(r)] = a;
      self(self, r + 1, remaining - a * r);
    }
    multiplicity[static_cast<std::size_t>(r)] = 0;
  };
  recurse(recurse, 1, m);

  const Rational total =
      Rational(factorial(static_cast<unsigned>(2 * m)) * int_pow2(static_cast<unsigned>(2 * m))) *
      sum;
  if (denominator(total) != 1)
    throw std::logic_error("even_total_by_exponential_formula: non-integer total");
  return numerator(total);
}

}  // namespace levyshuffle
