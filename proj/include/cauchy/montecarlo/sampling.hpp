#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "cauchy/errors.hpp"
#include "cauchy/geometry/direction.hpp"
#include "cauchy/montecarlo/philox.hpp"

namespace cauchy {

/// Uniform direction on S^{d-1}: d Box-Muller normals, normalized. A draw
/// whose norm is below 1e-8 is discarded and redrawn from the same stream.
inline Direction sample_direction(int d, SampleStream& stream) {
  if (d < 2) throw domain_error("sample_direction: dimension must be >= 2, got " + std::to_string(d));
  Eigen::VectorXd g(d);
  for (;;) {
    for (int i = 0; i < d; i += 2) {
      const auto [u1, u2] = stream.uniform_pair();
      const double r = std::sqrt(-2.0 * std::log(u1));
      const double t = 2.0 * std::numbers::pi * u2;
      g(i) = r * std::cos(t);
      if (i + 1 < d) g(i + 1) = r * std::sin(t);
    }
    const double n = g.norm();
    if (n >= 1e-8) return Direction(g / n);
  }
}

/// Direction for sample `index` of the stream keyed by `seed`.
inline Direction sample_direction(int d, Seed seed, std::uint64_t index) {
  SampleStream stream(seed, index);
  return sample_direction(d, stream);
}

/// `n` points drawn uniformly on the sphere of the given radius in R^d;
/// with probability one they are in general position and all extreme.
inline std::vector<Eigen::VectorXd> random_sphere_points(int d, int n, Seed seed, double radius = 1.0) {
  std::vector<Eigen::VectorXd> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(radius * sample_direction(d, seed, static_cast<std::uint64_t>(i)).components());
  return out;
}

}  // namespace cauchy
