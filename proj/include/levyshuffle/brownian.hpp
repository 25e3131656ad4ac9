#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "levyshuffle/rng.hpp"
#include "levyshuffle/signature.hpp"

namespace levyshuffle {

/// A sampled planar path: strictly increasing times starting at 0, points
/// starting at the origin.
struct PolygonalPath {
  std::vector<double> times;
  std::vector<std::array<double, 2>> points;

  int steps() const { return static_cast<int>(times.size()) - 1; }
};

/// Brownian path on a uniform grid: increments are independent centered
/// normals with variance horizon/steps per coordinate.
void sample_path_into(PolygonalPath& path, int steps, double horizon, Xoshiro256pp& rng);
PolygonalPath sample_path(int steps, double horizon, Xoshiro256pp& rng);

/// Levy area of the polygonal path (exact for straight segments).
double levy_area(const PolygonalPath& path);

TruncatedSignature path_signature(const PolygonalPath& path, int level);

struct McConfig {
  long long samples = 100000;
  int steps = 256;
  double horizon = 1.0;
  std::uint64_t seed = 42;
  int workers = 1;
  bool antithetic = false;
};

struct McEstimate {
  std::string target;
  double estimate = 0.0;
  double std_error = 0.0;
  double reference = 0.0;       // exact limiting value the estimate approaches
  double imag_estimate = 0.0;   // charfn only: mean sin(z A), a diagnostic
  McConfig config;
};

/// Sample moments E[A^n] of the Levy area for each requested order.
/// Deterministic for fixed (seed, workers): per-sample streams depend only
/// on (seed, sample index) and partial sums combine in a fixed tree order.
std::vector<McEstimate> estimate_moments(const std::vector<int>& orders, const McConfig& config);

/// Mean of cos(z A) at horizon 2*pi against sech(pi z); the horizon in the
/// config is ignored. imag_estimate carries the mean of sin(z A).
std::vector<McEstimate> estimate_charfn(const std::vector<double>& z_values,
                                        const McConfig& config);

struct SignatureEstimate {
  int level = 0;
  TruncatedSignature mean;
  TruncatedSignature std_error;
  TruncatedSignature reference;
  McConfig config;
};

/// Entry-wise Monte Carlo average of the truncated path signature at
/// horizon 1, against the tensor exponential of (xx + yy)/2.
SignatureEstimate estimate_expected_signature(int level, const McConfig& config);

/// Exact second moment of the polygonal-path area at the given step count:
/// E[A^2] = (horizon^2/4) (1 - 1/steps). The Monte Carlo tests compare
/// against this finite-steps value rather than the limit.
double polygonal_second_moment(int steps, double horizon);

}  // namespace levyshuffle
