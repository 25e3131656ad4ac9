#include "levyshuffle/series.hpp"

#include <stdexcept>

namespace levyshuffle {

PowerSeries sine_series(int degree) {
  PowerSeries s(degree);
  Rational term = 1;
  for (int k = 1; k <= degree; k += 2) {
    term /= k > 1 ? Rational((k - 1) * k) : Rational(1);
    s[k] = (k % 4 == 1) ? term : -term;
  }
  return s;
}

PowerSeries cosine_series(int degree) {
  PowerSeries s(degree);
  Rational term = 1;
  s[0] = 1;
  for (int k = 2; k <= degree; k += 2) {
    term /= Rational((k - 1) * k);
    s[k] = (k % 4 == 0) ? term : -term;
  }
  return s;
}

PowerSeries multiply(const PowerSeries& a, const PowerSeries& b) {
  const int degree = std::min(a.degree(), b.degree());
  PowerSeries out(degree);
  for (int i = 0; i <= degree; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= degree; ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

PowerSeries reciprocal(const PowerSeries& a) {
  if (a[0] == 0) throw std::invalid_argument("reciprocal: zero constant term");
  PowerSeries out(a.degree());
  out[0] = Rational(1) / a[0];
  for (int n = 1; n <= a.degree(); ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) acc += a[k] * out[n - k];
    out[n] = -acc / a[0];
  }
  return out;
}

PowerSeries exponential(const PowerSeries& a) {
  if (a[0] != 0) throw std::invalid_argument("exponential: nonzero constant term");
  PowerSeries out(a.degree());
  out[0] = 1;
  // g' = a' g, coefficient-wise: n g_n = sum_{k=1..n} k a_k g_{n-k}.
  for (int n = 1; n <= a.degree(); ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) acc += Rational(k) * a[k] * out[n - k];
    out[n] = acc / n;
  }
  return out;
}

PowerSeries integral(const PowerSeries& a) {
  PowerSeries out(a.degree());
  for (int n = 1; n <= a.degree(); ++n) out[n] = a[n - 1] / n;
  return out;
}

}  // namespace levyshuffle
