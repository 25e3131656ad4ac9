#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "levyshuffle/word.hpp"

namespace levyshuffle {

inline constexpr int kMaxSignatureLevel = 6;

// Truncated signature over a generic scalar. Level k is stored densely with
// 2^k entries indexed by the packed word bits (letter i in bit i), matching
// Word's layout, so concatenation of indices is u | (v << |u|). double is
// the production scalar; tests instantiate with exact rationals.
template <class Scalar>
struct BasicSignature {
  int level = 0;
  std::vector<std::vector<Scalar>> levels;  // levels[k].size() == 1 << k

  static BasicSignature unit(int level) {
    if (level < 0 || level > kMaxSignatureLevel)
      throw std::invalid_argument("signature level out of range [0, 6]");
    BasicSignature sig;
    sig.level = level;
    sig.levels.resize(static_cast<std::size_t>(level) + 1);
    for (int k = 0; k <= level; ++k)
      sig.levels[static_cast<std::size_t>(k)].assign(std::size_t{1} << k, Scalar(0));
    sig.levels[0][0] = Scalar(1);
    return sig;
  }

  const Scalar& at(const Word& w) const {
    if (static_cast<int>(w.length()) > level) throw std::out_of_range("signature entry beyond level");
    return levels[w.length()][w.bits()];
  }
};

using TruncatedSignature = BasicSignature<double>;

/// Signature of one straight segment with increment (dx, dy): the truncated
/// tensor exponential, level k = increment^{tensor k} / k!.
template <class Scalar>
void segment_signature_into(BasicSignature<Scalar>& out, const Scalar& dx, const Scalar& dy,
                            int level) {
  out = BasicSignature<Scalar>::unit(level);
  const Scalar v[2] = {dx, dy};
  for (int k = 1; k <= level; ++k) {
    auto& cur = out.levels[static_cast<std::size_t>(k)];
    const auto& prev = out.levels[static_cast<std::size_t>(k - 1)];
    const Scalar inv_k = Scalar(1) / Scalar(k);
    const std::size_t half = std::size_t{1} << (k - 1);
    for (std::size_t w = 0; w < half; ++w) {
      const Scalar base = prev[w] * inv_k;
      cur[w] = base * v[0];
      cur[w | half] = base * v[1];
    }
  }
}

template <class Scalar>
BasicSignature<Scalar> segment_signature(const Scalar& dx, const Scalar& dy, int level) {
  BasicSignature<Scalar> out;
  segment_signature_into(out, dx, dy, level);
  return out;
}

/// Truncated tensor-algebra product: out_k = sum_j a_j tensor b_{k-j}.
/// This is how signatures of consecutive path pieces combine.
template <class Scalar>
void chen_product_into(BasicSignature<Scalar>& out, const BasicSignature<Scalar>& a,
                       const BasicSignature<Scalar>& b) {
  const int level = a.level;
  if (b.level != level) throw std::invalid_argument("chen_product: level mismatch");
  if (out.level != level) out = BasicSignature<Scalar>::unit(level);
  for (int k = 0; k <= level; ++k)
    out.levels[static_cast<std::size_t>(k)].assign(std::size_t{1} << k, Scalar(0));
  for (int k = 0; k <= level; ++k) {
    auto& dst = out.levels[static_cast<std::size_t>(k)];
    for (int j = 0; j <= k; ++j) {
      const auto& lhs = a.levels[static_cast<std::size_t>(j)];
      const auto& rhs = b.levels[static_cast<std::size_t>(k - j)];
      const std::size_t lhs_size = std::size_t{1} << j;
      const std::size_t rhs_size = std::size_t{1} << (k - j);
      for (std::size_t wb = 0; wb < rhs_size; ++wb) {
        const Scalar& rv = rhs[wb];
        if (rv == Scalar(0)) continue;
        const std::size_t shifted = wb << j;
        for (std::size_t wa = 0; wa < lhs_size; ++wa) dst[wa | shifted] += lhs[wa] * rv;
      }
    }
  }
}

template <class Scalar>
BasicSignature<Scalar> chen_product(const BasicSignature<Scalar>& a,
                                    const BasicSignature<Scalar>& b) {
  BasicSignature<Scalar> out = BasicSignature<Scalar>::unit(a.level);
  chen_product_into(out, a, b);
  return out;
}

/// Signature of the polygonal path through the given points, as the ordered
/// product of its segment signatures.
template <class Scalar>
BasicSignature<Scalar> path_signature_from_points(const std::vector<std::array<Scalar, 2>>& points,
                                                  int level) {
  BasicSignature<Scalar> acc = BasicSignature<Scalar>::unit(level);
  BasicSignature<Scalar> seg, tmp;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const Scalar dx = points[i + 1][0] - points[i][0];
    const Scalar dy = points[i + 1][1] - points[i][1];
    segment_signature_into(seg, dx, dy, level);
    chen_product_into(tmp, acc, seg);
    std::swap(acc, tmp);
  }
  return acc;
}

/// Signed area between the polygonal path and its closing chord:
/// (1/2) sum x_i dy_i - y_i dx_i, exact on straight segments.
template <class Scalar>
Scalar chordal_area(const std::vector<std::array<Scalar, 2>>& points) {
  Scalar twice(0);
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const Scalar dx = points[i + 1][0] - points[i][0];
    const Scalar dy = points[i + 1][1] - points[i][1];
    twice += points[i][0] * dy - points[i][1] * dx;
  }
  return twice / Scalar(2);
}

/// Expected Brownian signature at time 1: the tensor exponential of
/// (xx + yy)/2. Level 2k holds 1/(2^k k!) at every paired word z_1^2...z_k^2;
/// odd levels and unpaired words are zero.
TruncatedSignature expected_signature_reference(int level);

}  // namespace levyshuffle
