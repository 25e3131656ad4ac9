#pragma once

#include <map>
#include <vector>

#include "levyshuffle/permutation.hpp"
#include "levyshuffle/rational.hpp"
#include "levyshuffle/word.hpp"

namespace levyshuffle {

// A finitely supported assignment of exact rational coefficients to words:
// an element of the tensor algebra on two letters. Kept canonical (no zero
// coefficient is ever stored), so equality is table equality.
class TensorPoly {
 public:
  TensorPoly() = default;

  static TensorPoly zero() { return TensorPoly{}; }
  static TensorPoly unit() { return monomial(Word{}); }
  static TensorPoly monomial(const Word& w, const Rational& coeff = 1);

  const std::map<Word, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Rational coefficient(const Word& w) const;
  void add_term(const Word& w, const Rational& coeff);

  TensorPoly& operator+=(const TensorPoly& other);
  TensorPoly& operator-=(const TensorPoly& other);
  TensorPoly& operator*=(const Rational& scalar);

  friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
  friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
  friend TensorPoly operator*(TensorPoly a, const Rational& s) { return a *= s; }
  friend TensorPoly operator*(const Rational& s, TensorPoly a) { return a *= s; }

  friend bool operator==(const TensorPoly&, const TensorPoly&) = default;

  /// Appends one letter to every word of the polynomial.
  TensorPoly appended(Letter l) const;

 private:
  std::map<Word, Rational> terms_;
};

/// Concatenation product: bilinear extension of word juxtaposition.
TensorPoly concat_product(const TensorPoly& a, const TensorPoly& b);

/// All (m,n)-shuffles: permutations of {0..m+n-1} increasing on the first m
/// and on the last n slots. Exactly C(m+n, m) of them.
std::vector<Permutation> enumerate_shuffles(int m, int n);

/// Shuffle product of two words via the recursion
///   u sh v = (u' sh v)*last(u) + (u sh v')*last(v).
/// This is the production path.
TensorPoly shuffle(const Word& u, const Word& v);

/// Shuffle product of two words by direct enumeration of (|u|,|v|)-shuffles.
/// Much slower; kept as the independent cross-check of shuffle().
TensorPoly shuffle_by_enumeration(const Word& u, const Word& v);

/// Bilinear extension of the shuffle product. Commutative and associative.
TensorPoly shuffle_product(const TensorPoly& a, const TensorPoly& b);

/// n-fold shuffle power; the 0th power is the unit 1*(empty word).
TensorPoly shuffle_power(const TensorPoly& a, int n);

/// Expansion of (xx + yy)^{tensor n}: all 2^n words z_1^2...z_n^2, coefficient 1.
TensorPoly tensor_power_diag(int n);

/// Diagonal duality pairing: sum over words of the coefficient products.
Rational pairing(const TensorPoly& dual, const TensorPoly& primal);

/// The tensor xy - yx whose shuffle powers drive the moment computations.
TensorPoly area_tensor();

}  // namespace levyshuffle
