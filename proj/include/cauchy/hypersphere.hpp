#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "cauchy/errors.hpp"
#include "cauchy/gammafn.hpp"

namespace cauchy {

// Vocabulary: the unit *ball* in R^d is the solid {|x| <= 1}; the unit
// *sphere* is its boundary. ball_volume(d) is the d-volume of the ball and
// sphere_surface(d) the (d-1)-measure of the sphere, so sphere_surface(3) = 4*pi
// and ball_volume(2) = pi.

struct SphereMeasure {
  int dimension;
  double surface;
  double ball_volume;
};

namespace detail {
inline void require_dimension(int d, const char* who) {
  if (d < 1) throw domain_error(std::string(who) + ": dimension must be >= 1, got " + std::to_string(d));
}
}  // namespace detail

/// (d-1)-measure of the unit sphere in R^d: 2 pi^{d/2} / Gamma(d/2).
inline double sphere_surface(int d) {
  detail::require_dimension(d, "sphere_surface");
  const double half = 0.5 * d;
  return 2.0 * std::exp(half * std::log(std::numbers::pi) - ln_gamma(half));
}

/// d-volume of the unit ball in R^d: pi^{d/2} / Gamma(d/2 + 1).
inline double ball_volume(int d) {
  detail::require_dimension(d, "ball_volume");
  const double half = 0.5 * d;
  return std::exp(half * std::log(std::numbers::pi) - ln_gamma(half + 1.0));
}

inline SphereMeasure sphere_measure(int d) {
  return SphereMeasure{d, sphere_surface(d), ball_volume(d)};
}

}  // namespace cauchy
