#include "levyshuffle/brownian.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "levyshuffle/moments.hpp"

namespace levyshuffle {

namespace {

constexpr double kPi = 3.14159265358979323846;

double ipow(double base, int exponent) {
  double out = 1.0;
  for (int k = 0; k < exponent; ++k) out *= base;
  return out;
}

struct SampleBlock {
  long long begin = 0;
  long long end = 0;
};

// Contiguous blocks; when samples come in antithetic pairs the block
// boundaries stay pair-aligned so a pair never straddles two workers.
std::vector<SampleBlock> partition_samples(long long samples, int workers, bool pair_aligned) {
  const long long units = pair_aligned ? samples / 2 : samples;
  std::vector<SampleBlock> blocks;
  long long begin = 0;
  for (int w = 0; w < workers; ++w) {
    long long count = units / workers + (w < units % workers ? 1 : 0);
    if (pair_aligned) count *= 2;
    blocks.push_back(SampleBlock{begin, begin + count});
    begin += count;
  }
  return blocks;
}

struct Accumulator {
  std::vector<double> sum;
  std::vector<double> sum_sq;
  long long count = 0;

  explicit Accumulator(std::size_t width) : sum(width, 0.0), sum_sq(width, 0.0) {}

  void observe(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      sum[i] += values[i];
      sum_sq[i] += values[i] * values[i];
    }
    ++count;
  }

  void merge(const Accumulator& other) {
    for (std::size_t i = 0; i < sum.size(); ++i) {
      sum[i] += other.sum[i];
      sum_sq[i] += other.sum_sq[i];
    }
    count += other.count;
  }
};

// Fixed pairwise-tree order, so the result is bit-stable for a given
// worker count regardless of thread scheduling.
Accumulator tree_reduce(std::vector<Accumulator> parts) {
  while (parts.size() > 1) {
    std::vector<Accumulator> next;
    for (std::size_t i = 0; i < parts.size(); i += 2) {
      if (i + 1 < parts.size()) parts[i].merge(parts[i + 1]);
      next.push_back(std::move(parts[i]));
    }
    parts = std::move(next);
  }
  return std::move(parts.front());
}

void validate_config(const McConfig& config) {
  if (config.samples <= 0) throw std::invalid_argument("mc: samples must be positive");
  if (config.steps <= 0) throw std::invalid_argument("mc: steps must be positive");
  if (config.horizon <= 0) throw std::invalid_argument("mc: horizon must be positive");
  if (config.workers < 1 || config.workers > 512)
    throw std::invalid_argument("mc: workers out of range [1, 512]");
  if (config.antithetic && config.samples % 2 != 0)
    throw std::invalid_argument("mc: antithetic sampling needs an even sample count");
}

// Runs fn(sample_index, rng_sign_applied_path) over every sample in the
// block, observing one value vector per sample (per pair when antithetic).
template <class PerPath>
Accumulator run_block(const McConfig& config, double horizon, SampleBlock block, std::size_t width,
                      PerPath&& per_path) {
  Accumulator acc(width);
  PolygonalPath path;
  std::vector<double> values(width, 0.0);
  std::vector<double> pair_values(width, 0.0);
  for (long long i = block.begin; i < block.end; ++i) {
    const std::uint64_t stream = config.antithetic ? static_cast<std::uint64_t>(i / 2)
                                                   : static_cast<std::uint64_t>(i);
    Xoshiro256pp rng = Xoshiro256pp::for_sample(config.seed, stream);
    sample_path_into(path, config.steps, horizon, rng);
    if (config.antithetic && i % 2 == 1) {
      for (auto& point : path.points) {
        point[0] = -point[0];
        point[1] = -point[1];
      }
    }
    per_path(path, values);
    if (!config.antithetic) {
      acc.observe(values);
    } else if (i % 2 == 0) {
      pair_values = values;
    } else {
      // The pair mean is the observation; its spread drives the std error.
      for (std::size_t k = 0; k < width; ++k)
        pair_values[k] = 0.5 * (pair_values[k] + values[k]);
      acc.observe(pair_values);
    }
  }
  return acc;
}

template <class PerPath>
Accumulator run_parallel(const McConfig& config, double horizon, std::size_t width,
                         const PerPath& per_path) {
  validate_config(config);
  const auto blocks = partition_samples(config.samples, config.workers, config.antithetic);
  std::vector<Accumulator> parts(blocks.size(), Accumulator(width));
  if (config.workers == 1) {
    parts[0] = run_block(config, horizon, blocks[0], width, per_path);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < blocks.size(); ++w) {
      threads.emplace_back([&, w] { parts[w] = run_block(config, horizon, blocks[w], width, per_path); });
    }
    for (auto& t : threads) t.join();
  }
  return tree_reduce(std::move(parts));
}

McEstimate make_estimate(std::string target, const Accumulator& acc, std::size_t index,
                         double reference, const McConfig& config) {
  McEstimate est;
  est.target = std::move(target);
  const double n = static_cast<double>(acc.count);
  est.estimate = acc.sum[index] / n;
  double variance = 0.0;
  if (acc.count > 1) {
    variance = (acc.sum_sq[index] - n * est.estimate * est.estimate) / (n - 1.0);
    if (variance < 0.0) variance = 0.0;  // rounding guard
  }
  est.std_error = std::sqrt(variance / n);
  est.reference = reference;
  est.config = config;
  return est;
}

}  // namespace

void sample_path_into(PolygonalPath& path, int steps, double horizon, Xoshiro256pp& rng) {
  if (steps < 1) throw std::invalid_argument("sample_path: steps must be >= 1");
  if (horizon <= 0) throw std::invalid_argument("sample_path: horizon must be positive");
  const std::size_t count = static_cast<std::size_t>(steps) + 1;
  path.times.resize(count);
  path.points.resize(count);
  const double dt = horizon / steps;
  const double sd = std::sqrt(dt);
  path.times[0] = 0.0;
  path.points[0] = {0.0, 0.0};
  for (int k = 1; k <= steps; ++k) {
    double gx, gy;
    rng.gaussian_pair(gx, gy);
    path.times[static_cast<std::size_t>(k)] = k * dt;
    path.points[static_cast<std::size_t>(k)] = {path.points[static_cast<std::size_t>(k - 1)][0] + sd * gx,
                                                path.points[static_cast<std::size_t>(k - 1)][1] + sd * gy};
  }
}

PolygonalPath sample_path(int steps, double horizon, Xoshiro256pp& rng) {
  PolygonalPath path;
  sample_path_into(path, steps, horizon, rng);
  return path;
}

double levy_area(const PolygonalPath& path) { return chordal_area(path.points); }

TruncatedSignature path_signature(const PolygonalPath& path, int level) {
  return path_signature_from_points(path.points, level);
}

TruncatedSignature expected_signature_reference(int level) {
  TruncatedSignature ref = TruncatedSignature::unit(level);
  for (int k = 2; k <= level; k += 2) {
    const int pairs = k / 2;
    const double value =
        1.0 / (std::ldexp(1.0, pairs) * to_double(Rational(factorial(static_cast<unsigned>(pairs)))));
    auto& entries = ref.levels[static_cast<std::size_t>(k)];
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << k); ++w) {
      bool paired = true;
      for (int i = 0; i < k && paired; i += 2) paired = ((w >> i) & 1u) == ((w >> (i + 1)) & 1u);
      if (paired) entries[w] = value;
    }
  }
  return ref;
}

double polygonal_second_moment(int steps, double horizon) {
  return horizon * horizon / 4.0 * (1.0 - 1.0 / steps);
}

std::vector<McEstimate> estimate_moments(const std::vector<int>& orders, const McConfig& config) {
  if (orders.empty()) throw std::invalid_argument("estimate_moments: no orders requested");
  for (int n : orders) {
    if (n < 0 || n > 12) throw std::invalid_argument("estimate_moments: order out of range [0, 12]");
  }
  const Accumulator acc =
      run_parallel(config, config.horizon, orders.size(), [&](const PolygonalPath& path, std::vector<double>& out) {
        const double area = levy_area(path);
        for (std::size_t k = 0; k < orders.size(); ++k) out[k] = ipow(area, orders[k]);
      });
  std::vector<McEstimate> estimates;
  for (std::size_t k = 0; k < orders.size(); ++k) {
    const int n = orders[k];
    const double reference = to_double(moment_closed_form(n)) * ipow(config.horizon, n);
    estimates.push_back(
        make_estimate("E[A^" + std::to_string(n) + "]", acc, k, reference, config));
  }
  return estimates;
}

std::vector<McEstimate> estimate_charfn(const std::vector<double>& z_values,
                                        const McConfig& config) {
  if (z_values.empty()) throw std::invalid_argument("estimate_charfn: no z values requested");
  McConfig fixed = config;
  fixed.horizon = 2.0 * kPi;  // the sech(pi z) law is the time-2*pi law
  const std::size_t width = 2 * z_values.size();
  const Accumulator acc =
      run_parallel(fixed, fixed.horizon, width, [&](const PolygonalPath& path, std::vector<double>& out) {
        const double area = levy_area(path);
        for (std::size_t k = 0; k < z_values.size(); ++k) {
          out[2 * k] = std::cos(z_values[k] * area);
          out[2 * k + 1] = std::sin(z_values[k] * area);
        }
      });
  std::vector<McEstimate> estimates;
  for (std::size_t k = 0; k < z_values.size(); ++k) {
    char label[64];
    std::snprintf(label, sizeof label, "E[cos(%g A)]", z_values[k]);
    McEstimate est = make_estimate(label, acc, 2 * k, charfn_reference(z_values[k]), fixed);
    est.imag_estimate = acc.sum[2 * k + 1] / static_cast<double>(acc.count);
    estimates.push_back(std::move(est));
  }
  return estimates;
}

SignatureEstimate estimate_expected_signature(int level, const McConfig& config) {
  if (level < 0 || level > kMaxSignatureLevel)
    throw std::invalid_argument("estimate_expected_signature: level out of range [0, 6]");
  McConfig fixed = config;
  fixed.horizon = 1.0;  // the reference tensor exponential is the time-1 law
  std::vector<std::size_t> offsets(static_cast<std::size_t>(level) + 2, 0);
  for (int k = 0; k <= level; ++k)
    offsets[static_cast<std::size_t>(k) + 1] = offsets[static_cast<std::size_t>(k)] + (std::size_t{1} << k);
  const std::size_t width = offsets.back();

  const Accumulator acc =
      run_parallel(fixed, fixed.horizon, width, [&](const PolygonalPath& path, std::vector<double>& out) {
        const TruncatedSignature sig = path_signature(path, level);
        for (int k = 0; k <= level; ++k) {
          const auto& entries = sig.levels[static_cast<std::size_t>(k)];
          std::copy(entries.begin(), entries.end(), out.begin() + static_cast<std::ptrdiff_t>(offsets[static_cast<std::size_t>(k)]));
        }
      });

  SignatureEstimate est;
  est.level = level;
  est.config = fixed;
  est.mean = TruncatedSignature::unit(level);
  est.std_error = TruncatedSignature::unit(level);
  est.reference = expected_signature_reference(level);
  const double n = static_cast<double>(acc.count);
  for (int k = 0; k <= level; ++k) {
    for (std::size_t w = 0; w < (std::size_t{1} << k); ++w) {
      const std::size_t idx = offsets[static_cast<std::size_t>(k)] + w;
      const double mean = acc.sum[idx] / n;
      double variance = 0.0;
      if (acc.count > 1) {
        variance = (acc.sum_sq[idx] - n * mean * mean) / (n - 1.0);
        if (variance < 0.0) variance = 0.0;
      }
      est.mean.levels[static_cast<std::size_t>(k)][w] = mean;
      est.std_error.levels[static_cast<std::size_t>(k)][w] = std::sqrt(variance / n);
    }
  }
  return est;
}

}  // namespace levyshuffle
