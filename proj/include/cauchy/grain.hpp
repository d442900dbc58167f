#pragma once

#include <cmath>
#include <string>

#include "cauchy/errors.hpp"

namespace cauchy {

/// Inputs to the radiative balance of a convex dust grain lit by a star. SI units.
struct GrainParams {
  double star_temperature;  // K
  double star_radius;       // m
  double distance;          // m, grain to star centre
  double albedo = 0.0;      // reflected fraction, [0, 1]
  double ratio = 0.25;      // <A_proj> / A_S; 1/4 for any convex grain in 3-d
};

inline void validate(const GrainParams& p) {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) throw domain_error(std::string(name) + " must be finite and > 0");
  };
  positive(p.star_temperature, "star temperature");
  positive(p.star_radius, "star radius");
  positive(p.distance, "distance");
  if (!(p.distance > p.star_radius)) throw domain_error("distance must exceed the star radius");
  if (!(p.albedo >= 0.0 && p.albedo <= 1.0)) throw domain_error("albedo must be in [0, 1]");
  if (!(p.ratio > 0.0 && p.ratio < 1.0)) throw domain_error("ratio must be in (0, 1)");
}

/// Equilibrium grain temperature from
///   A_S sigma T_g^4 = <A_proj> sigma T_*^4 (R_*/d)^2 (1 - a),
/// i.e. T_g = T_* [ratio (R_*/d)^2 (1 - a)]^{1/4}. sigma cancels.
inline double equilibrium_temperature(const GrainParams& p) {
  validate(p);
  const double dilution = p.star_radius / p.distance;
  return p.star_temperature * std::sqrt(std::sqrt(p.ratio * (1.0 - p.albedo))) * std::sqrt(dilution);
}

}  // namespace cauchy
