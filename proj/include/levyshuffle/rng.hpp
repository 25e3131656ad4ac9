#pragma once

#include <cmath>
#include <cstdint>

namespace levyshuffle {

// splitmix64: the counter-based mixer used to derive per-sample generator
// states. Output n is a fixed bijective hash of seed + n*gamma, so any
// sample's stream can be constructed directly from (seed, sample index)
// without sequencing through earlier samples.
struct SplitMix64 {
  std::uint64_t state = 0;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

// xoshiro256++ seeded via splitmix64 (the recommended pairing).
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed) {
    SplitMix64 sm{seed};
    for (auto& word : s_) word = sm.next();
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
  }

  /// Stream for one Monte Carlo sample: depends only on (seed, index), so
  /// results are independent of which worker draws which sample.
  static Xoshiro256pp for_sample(std::uint64_t seed, std::uint64_t index) {
    Xoshiro256pp rng(0);
    SplitMix64 sm{seed + index * 0x9e3779b97f4a7c15ULL * 4};
    for (auto& word : rng.s_) word = sm.next();
    if ((rng.s_[0] | rng.s_[1] | rng.s_[2] | rng.s_[3]) == 0) rng.s_[0] = 1;
    return rng;
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Box-Muller pair of independent standard normals. Branch-free draw
  /// count keeps streams aligned across runs.
  void gaussian_pair(double& g0, double& g1) {
    double u1 = 1.0 - uniform01();  // (0, 1]: log stays finite
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 6.283185307179586476925286766559 * u2;
    g0 = r * std::cos(theta);
    g1 = r * std::sin(theta);
  }

 private:
  static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

  std::uint64_t s_[4];
};

}  // namespace levyshuffle
