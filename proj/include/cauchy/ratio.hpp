#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "cauchy/errors.hpp"
#include "cauchy/exact_ratio.hpp"
#include "cauchy/gammafn.hpp"
#include "cauchy/hypersphere.hpp"

// k(d): ratio of the direction-averaged shadow (d-1)-volume of a convex body in
// R^d to its surface area. Four independent evaluations are provided so they
// can be checked against each other.

namespace cauchy {

namespace detail {
inline void require_ratio_dimension(int d, const char* who) {
  if (d < 2) throw domain_error(std::string(who) + ": dimension must be >= 2, got " + std::to_string(d));
}
}  // namespace detail

/// k(d) = 1 / (sqrt(pi) (d-1) M_d), with M_d = Gamma((d-1)/2)/Gamma(d/2).
inline double k_closed(int d) {
  detail::require_ratio_dimension(d, "k_closed");
  return 1.0 / (std::sqrt(std::numbers::pi) * (d - 1) * gamma_ratio_M(d));
}

/// k(d) by stepping k(m+1) = 1 / (2 pi m k(m)) up from k(2) = 1/pi.
inline double k_recursive(int d) {
  detail::require_ratio_dimension(d, "k_recursive");
  double k = std::numbers::inv_pi;
  for (int m = 2; m < d; ++m) k = 1.0 / (2.0 * std::numbers::pi * m * k);
  return k;
}

/// Exact k(d).
///   odd d:  (1/2)  prod_{n=0}^{(d-3)/2} (2n+1)/(2n+2)
///   even d: (1/pi) prod_{n=0}^{(d-4)/2} (2n+2)/(2n+3)
/// An empty index range (d = 2, d = 3) is an empty product.
inline ExactRatio k_product(int d) {
  detail::require_ratio_dimension(d, "k_product");
  using boost::multiprecision::cpp_int;
  cpp_int num = 1, den = 1;
  if (d % 2 == 1) {
    den = 2;
    for (int n = 0; n <= (d - 3) / 2; ++n) {
      num *= 2 * n + 1;
      den *= 2 * n + 2;
    }
    return ExactRatio(Rational(num, den), 0);
  }
  for (int n = 0; n <= (d - 4) / 2; ++n) {
    num *= 2 * n + 2;
    den *= 2 * n + 3;
  }
  return ExactRatio(Rational(num, den), -1);
}

/// Coefficients of the large-d expansion of k(d) in x = 1/d:
/// k = (2 pi)^{-1/2} sum_j c_j x^{j + 1/2}.
inline constexpr std::array<double, 5> kSeriesCoefficients = {1.0, 1.0 / 4.0, 1.0 / 32.0, -5.0 / 128.0,
                                                              -21.0 / 2048.0};

/// Partial sum of the large-d expansion with exactly n_terms terms.
inline double k_series(int d, int n_terms) {
  detail::require_ratio_dimension(d, "k_series");
  if (n_terms < 1 || n_terms > static_cast<int>(kSeriesCoefficients.size()))
    throw domain_error("k_series: n_terms must be in [1, 5], got " + std::to_string(n_terms));
  const double x = 1.0 / d;
  double term = std::sqrt(x);
  double sum = 0.0;
  for (int j = 0; j < n_terms; ++j) {
    sum += kSeriesCoefficients[j] * term;
    term *= x;
  }
  return sum / std::sqrt(2.0 * std::numbers::pi);
}

inline double relative_difference(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

struct RatioReport {
  int d;
  double closed;
  double recursive;
  ExactRatio product;
  std::optional<double> series;  // five-term series; absent when d < 5
  double max_pairwise_rel_err;   // over {closed, recursive, product} only
};

/// Evaluates every route at d. The series value is reported only where the
/// expansion is claimed to be accurate (d >= 5).
inline RatioReport ratio_report(int d) {
  detail::require_ratio_dimension(d, "ratio_report");
  RatioReport r{d, k_closed(d), k_recursive(d), k_product(d), std::nullopt, 0.0};
  if (d >= 5) r.series = k_series(d, 5);
  const double p = r.product.to_real();
  r.max_pairwise_rel_err = std::max({relative_difference(r.closed, r.recursive),
                                     relative_difference(r.closed, p), relative_difference(r.recursive, p)});
  return r;
}

struct TableRow {
  int d;
  double k;
};

inline constexpr int kTableMaxDimension = 64;

/// Rows (d, k_closed(d)) for d_min <= d <= d_max.
inline std::vector<TableRow> table(int d_min, int d_max) {
  if (d_min < 2 || d_max > kTableMaxDimension || d_min > d_max)
    throw domain_error("table: require 2 <= dmin <= dmax <= 64, got dmin=" + std::to_string(d_min) +
                       ", dmax=" + std::to_string(d_max));
  std::vector<TableRow> rows;
  rows.reserve(d_max - d_min + 1);
  for (int d = d_min; d <= d_max; ++d) rows.push_back({d, k_closed(d)});
  return rows;
}

/// Round half away from zero to `digits` decimals.
inline double round_decimals(double x, int digits) {
  const double scale = std::pow(10.0, digits);
  return std::round(x * scale) / scale;
}

}  // namespace cauchy
