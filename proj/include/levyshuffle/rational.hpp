#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace levyshuffle {

// Exact arithmetic used by every combinatorial pipeline. Coefficients such
// as 61/64 or 16!-sized matching counts must never round.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
Integer int_pow2(unsigned n);

/// Renders "p/q", or just "p" when the denominator is 1.
std::string rational_str(const Rational& value);

/// Accepts "p" or "p/q" (q > 0 after normalization). Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

/// Exact rational -> nearest double.
double to_double(const Rational& value);

}  // namespace levyshuffle
