#include "levyshuffle/permutation.hpp"

#include <algorithm>

namespace levyshuffle {

bool is_permutation(const Permutation& sigma) {
  const int n = static_cast<int>(sigma.size());
  std::vector<bool> seen(sigma.size(), false);
  for (int image : sigma) {
    if (image < 0 || image >= n || seen[static_cast<std::size_t>(image)]) return false;
    seen[static_cast<std::size_t>(image)] = true;
  }
  return true;
}

bool is_fixed_point_free_involution(const Permutation& sigma) {
  if (!is_permutation(sigma)) return false;
  const int n = static_cast<int>(sigma.size());
  for (int i = 0; i < n; ++i) {
    if (sigma[static_cast<std::size_t>(i)] == i) return false;
    if (sigma[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] != i) return false;
  }
  return true;
}

int cycle_count(const Permutation& sigma) {
  int cycles = 0;
  std::vector<bool> seen(sigma.size(), false);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<std::size_t>(sigma[j]);
    }
  }
  return cycles;
}

std::vector<int> cycle_lengths(const Permutation& sigma) {
  std::vector<int> lengths;
  std::vector<bool> seen(sigma.size(), false);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<std::size_t>(sigma[j]);
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

Permutation conjugate(const Permutation& sigma, const Permutation& g) {
  Permutation out(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i)
    out[static_cast<std::size_t>(g[i])] = g[static_cast<std::size_t>(sigma[i])];
  return out;
}

Permutation inverse(const Permutation& sigma) {
  Permutation out(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i)
    out[static_cast<std::size_t>(sigma[i])] = static_cast<int>(i);
  return out;
}

std::string cycle_str(const Permutation& sigma) {
  std::string out;
  std::vector<bool> seen(sigma.size(), false);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (seen[i] || sigma[i] == static_cast<int>(i)) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(sigma[j]);
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace levyshuffle
