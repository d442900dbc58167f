#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "cauchy/errors.hpp"

namespace cauchy {

/// A strictly positive, finite real. Construction rejects everything else.
class PositiveReal {
 public:
  explicit PositiveReal(double value) : value_(value) {
    if (!(value > 0.0) || !std::isfinite(value))
      throw domain_error("PositiveReal: expected a finite value > 0, got " + std::to_string(value));
  }
  double value() const noexcept { return value_; }
  operator double() const noexcept { return value_; }

 private:
  double value_;
};

namespace detail {

// Lanczos approximation, g = 671/128 with 14 coefficients (Godfrey's set as
// tabulated in Numerical Recipes, 3rd ed.); ~1e-15 relative in Gamma(x).
inline double lanczos_ln_gamma(double x) {
  static constexpr double cof[14] = {
      57.1562356658629235,     -59.5979603554754912,     14.1360979747417471,
      -0.491913816097620199,   .339946499848118887e-4,   .465236289270485756e-4,
      -.983744753048795646e-4, .158088703224912494e-3,   -.210264441724104883e-3,
      .217439618115212643e-3,  -.164318106536763890e-3,  .844182239838527433e-4,
      -.261908384015814087e-4, .368991826595316234e-5};
  double y = x;
  double tmp = x + 5.24218750000000000;
  tmp = (x + 0.5) * std::log(tmp) - tmp;
  double ser = 0.999999999999997092;
  for (double c : cof) ser += c / ++y;
  return tmp + std::log(2.5066282746310005 * ser / x);
}

}  // namespace detail

/// ln Gamma(x) for x > 0.
///
/// Near the zeros of ln Gamma at x = 1 and x = 2 the result is computed from
/// a short series about those points, where the Lanczos sum alone would lose
/// relative accuracy to cancellation.
inline double ln_gamma(PositiveReal px) {
  const double x = px.value();
  if (x == 1.0 || x == 2.0) return 0.0;
  // ln Gamma(1 + e) = -gamma*e + sum_{k>=2} (-1)^k zeta(k) e^k / k
  auto near_one = [](double e) {
    static constexpr double zeta[] = {0.0, 0.0,
                                      1.6449340668482264365, 1.2020569031595942854,
                                      1.0823232337111381915, 1.0369277551433699263,
                                      1.0173430619844491397, 1.0083492773819228268,
                                      1.0040773561979443394, 1.0020083928260822144,
                                      1.0009945751278180853, 1.0004941886041194646,
                                      1.0002460865533080483, 1.0001227133475784891,
                                      1.0000612481350587048, 1.0000305882363070205,
                                      1.0000152822594086519, 1.0000076371976378998};
    constexpr double euler_gamma = 0.57721566490153286061;
    double sum = 0.0;
    double p = -e;
    for (int k = 2; k < 18; ++k) {
      p *= -e;
      sum += zeta[k] * p / k;
    }
    return -euler_gamma * e + sum;
  };
  if (std::abs(x - 1.0) < 0.125) return near_one(x - 1.0);
  // ln Gamma(2 + e) = ln(1 + e) + ln Gamma(1 + e)
  if (std::abs(x - 2.0) < 0.125) return std::log1p(x - 2.0) + near_one(x - 2.0);
  return detail::lanczos_ln_gamma(x);
}

inline double ln_gamma(double x) { return ln_gamma(PositiveReal(x)); }

/// Gamma((d-1)/2) / Gamma(d/2), computed as a difference of logs so that it
/// stays finite for dimensions where Gamma(d/2) alone overflows.
inline double gamma_ratio_M(int d) {
  if (d < 2) throw domain_error("gamma_ratio_M: dimension must be >= 2, got " + std::to_string(d));
  // (d-1)/2 and d/2 are exact in binary floating point.
  const double a = 0.5 * static_cast<double>(d - 1);
  const double b = 0.5 * static_cast<double>(d);
  return std::exp(ln_gamma(a) - ln_gamma(b));
}

}  // namespace cauchy
