#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <variant>

#include "cauchy/errors.hpp"
#include "cauchy/geometry/direction.hpp"
#include "cauchy/geometry/hull.hpp"
#include "cauchy/geometry/polytope.hpp"
#include "cauchy/hypersphere.hpp"

namespace cauchy {

inline constexpr int kMaxAnalyticDim = 64;

namespace detail {
inline void require_analytic(int d, double size, const char* what) {
  if (d < 2 || d > kMaxAnalyticDim)
    throw domain_error(std::string(what) + ": dimension must be in [2, 64], got " + std::to_string(d));
  if (!(size > 0.0) || !std::isfinite(size))
    throw domain_error(std::string(what) + ": size must be finite and > 0");
}
}  // namespace detail

/// Ball of the given radius in R^dim.
struct Ball {
  int dim;
  double radius;
  Ball(int d, double r) : dim(d), radius(r) { detail::require_analytic(d, r, "Ball"); }
};

/// Axis-aligned cube of the given side in R^dim.
struct Cube {
  int dim;
  double side;
  Cube(int d, double s) : dim(d), side(s) { detail::require_analytic(d, s, "Cube"); }
};

using Shape = std::variant<Polytope, Ball, Cube>;

inline int dim(const Shape& s) {
  return std::visit([](const auto& v) -> int {
    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Polytope>) return v.dim();
    else return v.dim;
  }, s);
}

namespace detail {

template <int D>
hull::PointSet<D> local_points(const Polytope& p, const std::vector<int>* subset = nullptr) {
  hull::PointSet<D> out;
  auto add = [&](int i) { out.push_back(hull::Point<D>(p.vertices()[i] - p.centroid())); };
  if (subset) {
    for (int i : *subset) add(i);
  } else {
    for (int i = 0; i < static_cast<int>(p.vertices().size()); ++i) add(i);
  }
  return out;
}

inline double polytope_surface(const Polytope& p) {
  return dispatch_dim(p.dim(), [&](auto tag) {
    constexpr int D = decltype(tag)::value;
    const auto pts = local_points<D>(p);
    double total = 0.0;
    for (const auto& f : p.facets()) {
      hull::FacetPlane<D> plane;
      plane.indices = f.vertex_indices;
      plane.normal = hull::Point<D>(f.unit_normal.components());
      plane.offset = f.offset - f.unit_normal.components().dot(p.centroid());
      total += hull::facet_volume<D>(pts, plane, p.tolerance());
    }
    return total;
  });
}

inline double polytope_shadow(const Polytope& p, const Direction& u) {
  return dispatch_dim(p.dim(), [&](auto tag) {
    constexpr int D = decltype(tag)::value;
    const auto pts = local_points<D>(p);
    const auto basis = hull::complement_basis<D>(hull::Point<D>(u.components()));
    hull::PointSet<D - 1> shadow;
    shadow.reserve(pts.size());
    for (const auto& q : pts) shadow.push_back(hull::to_plane_coords<D>(basis, q));
    if constexpr (D - 1 >= 2) {
      // The projection of a full-dimensional body cannot be flat; check anyway
      // so a corrupted polytope fails loudly instead of returning 0.
      Eigen::Matrix<double, D - 1, Eigen::Dynamic> m(D - 1, shadow.size());
      for (std::size_t j = 0; j < shadow.size(); ++j) m.col(j) = shadow[j];
      const auto sv = Eigen::JacobiSVD<Eigen::Matrix<double, D - 1, Eigen::Dynamic>>(m).singularValues();
      if (sv(D - 2) <= kGeometryTolerance * sv(0))
        throw degenerate_error("shadow_area: projected points have affine rank < d-1");
    }
    return hull::hull_volume<D - 1>(shadow, p.tolerance());
  });
}

}  // namespace detail

/// Total (d-1)-measure of the boundary.
inline double surface_area(const Shape& s) {
  struct Visitor {
    double operator()(const Polytope& p) const { return detail::polytope_surface(p); }
    double operator()(const Ball& b) const { return sphere_surface(b.dim) * std::pow(b.radius, b.dim - 1); }
    double operator()(const Cube& c) const { return 2.0 * c.dim * std::pow(c.side, c.dim - 1); }
  };
  return std::visit(Visitor{}, s);
}

/// (d-1)-volume of the orthogonal projection of `s` onto the hyperplane u-perp.
inline double shadow_area(const Shape& s, const Direction& u) {
  if (u.dim() != dim(s))
    throw dimension_mismatch("shadow_area: direction has dimension " + std::to_string(u.dim()) +
                             ", shape has dimension " + std::to_string(dim(s)));
  struct Visitor {
    const Direction& u;
    double operator()(const Polytope& p) const { return detail::polytope_shadow(p, u); }
    double operator()(const Ball& b) const { return ball_volume(b.dim - 1) * std::pow(b.radius, b.dim - 1); }
    double operator()(const Cube& c) const {
      return std::pow(c.side, c.dim - 1) * u.components().cwiseAbs().sum();
    }
  };
  return std::visit(Visitor{u}, s);
}

/// Direction-averaged width of a convex polygon, from perimeter / pi.
inline double mean_width_check_2d(const Polytope& p) {
  if (p.dim() != 2) throw dimension_mismatch("mean_width_check_2d: polygon must be 2-dimensional");
  return surface_area(Shape{p}) / std::numbers::pi;
}

}  // namespace cauchy
