#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "cauchy/errors.hpp"

namespace cauchy {

/// Unit vector in R^d: a line of sight / projection direction.
class Direction {
 public:
  static constexpr double kNormTolerance = 1e-12;

  explicit Direction(Eigen::VectorXd components) : c_(std::move(components)) {
    if (c_.size() < 1) throw domain_error("Direction: empty vector");
    if (!c_.allFinite()) throw domain_error("Direction: non-finite component");
    if (std::abs(c_.norm() - 1.0) > kNormTolerance)
      throw domain_error("Direction: norm must be 1 within 1e-12, got " + std::to_string(c_.norm()));
  }

  /// Scales `v` to unit length. Throws for a zero or non-finite vector.
  static Direction normalized(const Eigen::VectorXd& v) {
    const double n = v.norm();
    if (!(n > 0.0) || !std::isfinite(n)) throw domain_error("Direction: cannot normalize a zero vector");
    return Direction(v / n);
  }

  int dim() const noexcept { return static_cast<int>(c_.size()); }
  const Eigen::VectorXd& components() const noexcept { return c_; }
  double operator[](int i) const { return c_(i); }
  Direction operator-() const { return Direction(-c_); }

 private:
  Eigen::VectorXd c_;
};

}  // namespace cauchy
