#pragma once

#include <string>
#include <vector>

#include "levyshuffle/rational.hpp"

namespace levyshuffle {

/// Default cap on the contraction route; (xy-yx)^{sh 8} already touches
/// 12870 words of length 16. Overridable per call.
inline constexpr int kDefaultMaxMomentOrder = 8;

/// E[A^n] for the unit-time Levy area, by four independent exact routes.
struct MomentReport {
  int n = 0;
  Rational contraction;    // 4^{-n}/n! <(xy-yx)^{sh n}, (xx+yy)^{tensor n}>
  Rational letter_matching;  // 4^{-n}/n! * signed matching count over even words
  Rational exponential;    // 4^{-n}/n! * cycle/exponential-formula total
  Rational closed_form;    // 2^{-n} E_n
  bool agreement = false;

  const Rational& value() const { return closed_form; }
};

Rational moment_by_contraction(int n, int n_limit = kDefaultMaxMomentOrder);
Rational moment_by_letter_matchings(int n);
Rational moment_by_exponential_formula(int n);
Rational moment_closed_form(int n);

MomentReport moment_report(int n, int n_limit = kDefaultMaxMomentOrder);

/// A positive scale r * pi^p (p in {0,1}); also the shape of exact scaled
/// moments, which are rational multiples of powers of pi.
struct PiScaled {
  Rational coefficient = 1;
  int pi_power = 0;
};

/// Parses "1", "3/2", "pi", "2pi", "1/2 pi" (whitespace optional).
PiScaled parse_scale(const std::string& text);

/// E[A_T^n] = T^n E[A_1^n] = (T/2)^n E_n for horizon T = coefficient * pi^p.
/// Exact: pi is carried symbolically as an exponent.
PiScaled scaled_moment(int n, const PiScaled& horizon);

struct MomentTable {
  PiScaled horizon;
  std::vector<MomentReport> rows;  // n = 0..n_max
  bool all_agree = false;
};

MomentTable compute_moment_table(int n_max, const PiScaled& horizon,
                                 int n_limit = kDefaultMaxMomentOrder);

/// Partial sum over n <= n_terms of pi^n E_n (iz)^n / n! (real: odd terms
/// vanish). Converges to sech(pi z) for |z| < 1/2.
double charfn_partial_sum(double z, int n_terms);

/// sech(pi z), the characteristic function of the Levy area at time 2*pi.
double charfn_reference(double z);

}  // namespace levyshuffle
