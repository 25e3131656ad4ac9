#include "levyshuffle/tensor_poly.hpp"

#include <stdexcept>
#include <utility>

namespace levyshuffle {

TensorPoly TensorPoly::monomial(const Word& w, const Rational& coeff) {
  TensorPoly p;
  if (coeff != 0) p.terms_.emplace(w, coeff);
  return p;
}

Rational TensorPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TensorPoly::add_term(const Word& w, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

TensorPoly& TensorPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= scalar;
  return *this;
}

TensorPoly TensorPoly::appended(Letter l) const {
  TensorPoly out;
  for (const auto& [w, c] : terms_) {
    Word ext = w;
    ext.push_back(l);
    out.terms_.emplace(ext, c);  // appending preserves the map order within a length
  }
  return out;
}

TensorPoly concat_product(const TensorPoly& a, const TensorPoly& b) {
  TensorPoly out;
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) out.add_term(concat(u, v), cu * cv);
  return out;
}

std::vector<Permutation> enumerate_shuffles(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("enumerate_shuffles: negative block size");
  const int total = m + n;
  std::vector<Permutation> out;
  // A shuffle is determined by the image set of the first block; walk the
  // m-subsets of {0..total-1} in lexicographic order.
  std::vector<int> comb(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) comb[static_cast<std::size_t>(i)] = i;
  while (true) {
    Permutation sigma(static_cast<std::size_t>(total));
    std::vector<bool> used(static_cast<std::size_t>(total), false);
    for (int i = 0; i < m; ++i) {
      sigma[static_cast<std::size_t>(i)] = comb[static_cast<std::size_t>(i)];
      used[static_cast<std::size_t>(comb[static_cast<std::size_t>(i)])] = true;
    }
    int slot = m;
    for (int p = 0; p < total; ++p) {
      if (!used[static_cast<std::size_t>(p)]) sigma[static_cast<std::size_t>(slot++)] = p;
    }
    out.push_back(std::move(sigma));
    // next combination
    int i = m - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == total - m + i) --i;
    if (i < 0) break;
    ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < m; ++j)
      comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

TensorPoly shuffle(const Word& u, const Word& v) {
  const std::size_t a = u.length(), b = v.length();
  if (a + b > Word::max_length) throw std::length_error("shuffle: combined length > 64");
  // dp[i][j] = shuffle of the first i letters of u with the first j of v.
  std::vector<std::vector<TensorPoly>> dp(a + 1, std::vector<TensorPoly>(b + 1));
  dp[0][0] = TensorPoly::unit();
  for (std::size_t i = 0; i <= a; ++i) {
    for (std::size_t j = 0; j <= b; ++j) {
      if (i == 0 && j == 0) continue;
      TensorPoly acc;
      if (i > 0) acc += dp[i - 1][j].appended(u.at(i - 1));
      if (j > 0) acc += dp[i][j - 1].appended(v.at(j - 1));
      dp[i][j] = std::move(acc);
    }
  }
  return dp[a][b];
}

TensorPoly shuffle_by_enumeration(const Word& u, const Word& v) {
  const int m = static_cast<int>(u.length());
  const int n = static_cast<int>(v.length());
  const Word uv = concat(u, v);
  TensorPoly out;
  for (const Permutation& sigma : enumerate_shuffles(m, n)) {
    std::uint64_t bits = 0;
    for (int j = 0; j < m + n; ++j) {
      bits |= static_cast<std::uint64_t>(uv.at(static_cast<std::size_t>(j)))
              << sigma[static_cast<std::size_t>(j)];
    }
    out.add_term(Word::from_bits(bits, static_cast<std::size_t>(m + n)), 1);
  }
  return out;
}

TensorPoly shuffle_product(const TensorPoly& a, const TensorPoly& b) {
  TensorPoly out;
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [v, cv] : b.terms()) {
      const Rational coeff = cu * cv;
      const TensorPoly shuffled = shuffle(u, v);
      for (const auto& [w, k] : shuffled.terms()) out.add_term(w, coeff * k);
    }
  }
  return out;
}

TensorPoly shuffle_power(const TensorPoly& a, int n) {
  if (n < 0) throw std::invalid_argument("shuffle_power: negative exponent");
  TensorPoly out = TensorPoly::unit();
  for (int k = 0; k < n; ++k) out = shuffle_product(out, a);
  return out;
}

TensorPoly tensor_power_diag(int n) {
  if (n < 0 || 2 * n > static_cast<int>(Word::max_length))
    throw std::invalid_argument("tensor_power_diag: n out of range");
  TensorPoly out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Word w;
    for (int i = 0; i < n; ++i) {
      Letter l = static_cast<Letter>((mask >> i) & 1u);
      w.push_back(l);
      w.push_back(l);
    }
    out.add_term(w, 1);
  }
  return out;
}

Rational pairing(const TensorPoly& dual, const TensorPoly& primal) {
  const TensorPoly& small = dual.term_count() <= primal.term_count() ? dual : primal;
  const TensorPoly& large = dual.term_count() <= primal.term_count() ? primal : dual;
  Rational sum = 0;
  for (const auto& [w, c] : small.terms()) sum += c * large.coefficient(w);
  return sum;
}

TensorPoly area_tensor() {
  TensorPoly p;
  p.add_term(Word::parse("xy"), 1);
  p.add_term(Word::parse("yx"), -1);
  return p;
}

}  // namespace levyshuffle
