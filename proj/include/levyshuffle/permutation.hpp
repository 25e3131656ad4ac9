#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace levyshuffle {

// A permutation of {0..n-1} stored as its image table: sigma[i] is the image
// of i. External/serialized forms are 1-indexed.
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& sigma);
bool is_fixed_point_free_involution(const Permutation& sigma);
int cycle_count(const Permutation& sigma);
std::vector<int> cycle_lengths(const Permutation& sigma);

/// g o sigma o g^{-1}.
Permutation conjugate(const Permutation& sigma, const Permutation& g);

Permutation inverse(const Permutation& sigma);

/// Cycle notation with 1-based points, e.g. "(1 3)(2 8)(4 6)(5 7)".
std::string cycle_str(const Permutation& sigma);

}  // namespace levyshuffle
