#pragma once

#include <vector>

#include "levyshuffle/rational.hpp"

namespace levyshuffle {

// Truncated formal power series over exact rationals. One audited kernel
// for every series manipulation (reciprocal, exp, integral) instead of
// per-sequence ad-hoc recurrences.
class PowerSeries {
 public:
  explicit PowerSeries(int degree) : coeff_(static_cast<std::size_t>(degree) + 1) {}

  int degree() const { return static_cast<int>(coeff_.size()) - 1; }
  const Rational& operator[](int k) const { return coeff_[static_cast<std::size_t>(k)]; }
  Rational& operator[](int k) { return coeff_[static_cast<std::size_t>(k)]; }

  static PowerSeries one(int degree) {
    PowerSeries s(degree);
    s[0] = 1;
    return s;
  }

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> coeff_;
};

PowerSeries sine_series(int degree);
PowerSeries cosine_series(int degree);

/// Truncated convolution; result degree = min of the operand degrees.
PowerSeries multiply(const PowerSeries& a, const PowerSeries& b);

/// 1/a; requires a[0] != 0.
PowerSeries reciprocal(const PowerSeries& a);

/// exp(a); requires a[0] == 0. Uses the recurrence n g_n = sum k a_k g_{n-k}.
PowerSeries exponential(const PowerSeries& a);

/// Antiderivative with zero constant term, same truncation degree.
PowerSeries integral(const PowerSeries& a);

}  // namespace levyshuffle
