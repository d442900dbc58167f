#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "cauchy/errors.hpp"
#include "cauchy/geometry/shape.hpp"
#include "cauchy/montecarlo/philox.hpp"
#include "cauchy/montecarlo/sampling.hpp"
#include "cauchy/ratio.hpp"

namespace cauchy {

struct ShadowEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(n), (n-1) denominator
  std::int64_t n_samples = 0;
  int dim = 0;
  Seed seed;
};

/// Running count / mean / sum of squared deviations.
struct Moments {
  std::int64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) noexcept {
    ++n;
    const double delta = x - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (x - mean);
  }

  /// Chan et al. pairwise combination.
  void merge(const Moments& o) noexcept {
    if (o.n == 0) return;
    if (n == 0) {
      *this = o;
      return;
    }
    const double total = static_cast<double>(n + o.n);
    const double delta = o.mean - mean;
    mean += delta * static_cast<double>(o.n) / total;
    m2 += o.m2 + delta * delta * static_cast<double>(n) * static_cast<double>(o.n) / total;
    n += o.n;
  }
};

struct EstimatorOptions {
  unsigned threads = 0;               // 0 = hardware concurrency
  std::int64_t block_size = 4096;     // samples per work unit; fixes the merge tree
};

/// Monte Carlo estimate of the direction-averaged shadow of `s` over `n`
/// uniform directions. Sample i uses the direction drawn from (seed, i).
/// Samples are grouped in fixed-size blocks merged in block order, so the
/// result is bit-identical for any thread count.
inline ShadowEstimate mean_projected_area(const Shape& s, std::int64_t n, Seed seed, EstimatorOptions opt = {}) {
  if (n < 2) throw domain_error("mean_projected_area: need at least 2 samples, got " + std::to_string(n));
  if (opt.block_size < 1) throw domain_error("mean_projected_area: block_size must be >= 1");
  const int d = dim(s);

  if (std::holds_alternative<Ball>(s)) {
    // Every direction casts the same shadow.
    const double a = shadow_area(s, sample_direction(d, seed, 0));
    return ShadowEstimate{a, 0.0, n, d, seed};
  }

  const std::int64_t n_blocks = (n + opt.block_size - 1) / opt.block_size;
  std::vector<Moments> blocks(static_cast<std::size_t>(n_blocks));
  std::atomic<std::int64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    try {
      for (std::int64_t b; (b = next.fetch_add(1)) < n_blocks;) {
        Moments m;
        const std::int64_t end = std::min(n, (b + 1) * opt.block_size);
        for (std::int64_t i = b * opt.block_size; i < end; ++i)
          m.add(shadow_area(s, sample_direction(d, seed, static_cast<std::uint64_t>(i))));
        blocks[static_cast<std::size_t>(b)] = m;
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = n_blocks;
    }
  };

  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::int64_t>(threads, n_blocks));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  Moments total;
  for (const auto& m : blocks) total.merge(m);
  const double var = total.m2 / static_cast<double>(n - 1);
  return ShadowEstimate{total.mean, std::sqrt(var / static_cast<double>(n)), n, d, seed};
}

struct Verification {
  ShadowEstimate estimate;
  double surface = 0.0;    // A_S
  double k = 0.0;          // k(d)
  double predicted = 0.0;  // k(d) * A_S
  double z = 0.0;          // (mean - predicted) / stderr; 0 when stderr == 0
  bool pass = false;
};

inline constexpr double kZThreshold = 4.0;
inline constexpr double kExactRelTolerance = 1e-9;

/// Checks mean shadow / surface area against k(d) for one shape.
inline Verification verify_ratio(const Shape& s, std::int64_t n, Seed seed, EstimatorOptions opt = {}) {
  Verification v;
  v.estimate = mean_projected_area(s, n, seed, opt);
  v.surface = surface_area(s);
  v.k = k_closed(dim(s));
  v.predicted = v.k * v.surface;
  const double gap = v.estimate.mean - v.predicted;
  if (v.estimate.std_error > 0.0) {
    v.z = gap / v.estimate.std_error;
    v.pass = std::abs(v.z) <= kZThreshold;
  } else {
    v.pass = std::abs(gap) <= kExactRelTolerance * v.surface;
  }
  return v;
}

}  // namespace cauchy
