#pragma once

#include <vector>

#include "levyshuffle/rational.hpp"

namespace levyshuffle {

/// Euler (secant) numbers E_0..E_N: n! times the z^n coefficient of 1/cos z.
/// E_n = 0 for odd n. E_0=1, E_2=1, E_4=5, E_6=61, E_8=1385.
std::vector<Integer> euler_numbers(int n_max);

/// Tangent numbers T_1..T_R: (2r-1)! times the z^(2r-1) coefficient of tan z.
/// Element [r-1] is T_r. T = 1, 2, 16, 272, ...
std::vector<Integer> tangent_numbers(int r_max);

/// Row t of the Eulerian triangle: [d] = number of permutations of t symbols
/// with exactly d descents, d = 0..t-1.
std::vector<Integer> eulerian_row(int t);

/// Sum over d of (-1)^d <2r-1, d>. Checked against (-1)^(r-1) T_r before
/// returning; throws std::logic_error on mismatch.
Integer alternating_eulerian_sum(int r);

/// Signed count of single-cycle block matchings of length 2r, with the
/// subtotal over words starting with X (exactly half by X/Y symmetry).
struct SingleCycleCount {
  Integer total;
  Integer starting_with_x;
};

/// Exhaustive enumeration; checked against total = 2 T_r before returning.
SingleCycleCount signed_single_cycle_count(int r);

/// Assembles the even-word coefficient total for 2m factors from the
/// single-cycle counts c_{2r} = 2 T_r:
///   (2m)! 4^m * sum over a_1..a_m, sum r a_r = m, of
///   (2m)!/prod (2r)!^{a_r} * prod c_{2r}^{a_r} / (2^{a_r} a_r!).
Integer even_total_by_exponential_formula(int m);

}  // namespace levyshuffle
