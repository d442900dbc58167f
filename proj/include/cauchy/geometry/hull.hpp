#pragma once

// Fixed-dimension convex hull kernels for small d (1..4): supporting-hyperplane
// facet enumeration and recursive hull volume. Point sets are expected to be
// centered near the origin by the caller; tolerances are absolute.

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "cauchy/errors.hpp"

namespace cauchy::hull {

template <int D>
using Point = Eigen::Matrix<double, D, 1>;

template <int D>
using PointSet = std::vector<Point<D>>;

template <int D>
struct FacetPlane {
  std::vector<int> indices;  // points lying on the plane, ascending
  Point<D> normal;           // unit, outward
  double offset;             // normal . x = offset on the plane
};

/// Columns form an orthonormal basis of the hyperplane orthogonal to `unit_normal`.
/// Built from the Householder reflection that maps e_0 onto the normal line.
template <int D>
Eigen::Matrix<double, D, D - 1> complement_basis(const Point<D>& unit_normal) {
  Point<D> v = unit_normal;
  v(0) += unit_normal(0) >= 0.0 ? 1.0 : -1.0;
  const Eigen::Matrix<double, D, D> h =
      Eigen::Matrix<double, D, D>::Identity() - (2.0 / v.squaredNorm()) * (v * v.transpose());
  return h.template rightCols<D - 1>();
}

template <int D>
Point<D - 1> to_plane_coords(const Eigen::Matrix<double, D, D - 1>& basis, const Point<D>& p) {
  return basis.transpose() * p;
}

/// Unnormalized normal of the hyperplane through D points (generalized cross product).
template <int D>
Point<D> cofactor_normal(const PointSet<D>& pts, const std::array<int, D>& idx) {
  Eigen::Matrix<double, D - 1, D> m;
  for (int r = 0; r < D - 1; ++r) m.row(r) = (pts[idx[r + 1]] - pts[idx[0]]).transpose();
  Point<D> n;
  for (int i = 0; i < D; ++i) {
    Eigen::Matrix<double, D - 1, D - 1> minor;
    for (int c = 0, cc = 0; c < D; ++c) {
      if (c == i) continue;
      minor.col(cc++) = m.col(c);
    }
    n(i) = (i % 2 == 0 ? 1.0 : -1.0) * minor.determinant();
  }
  return n;
}

inline bool next_combination(int* idx, int k, int n) {
  int i = k - 1;
  while (i >= 0 && idx[i] == n - k + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

template <int D>
double max_norm(const PointSet<D>& pts) {
  double s = 0.0;
  for (const auto& p : pts) s = std::max(s, p.norm());
  return s;
}

/// All facets of conv(pts) in R^D, D >= 2, by testing every D-subset for a
/// supporting hyperplane. Points within `tol` of a supporting plane are
/// grouped into one facet, so coplanar vertex groups are never split.
template <int D>
std::vector<FacetPlane<D>> enumerate_facets(const PointSet<D>& pts, double tol) {
  static_assert(D >= 2);
  const int n = static_cast<int>(pts.size());
  std::vector<FacetPlane<D>> facets;
  if (n < D + 1) throw degenerate_error("enumerate_facets: need at least " + std::to_string(D + 1) + " points");

  const double scale = std::max(max_norm<D>(pts), tol);
  const double normal_floor = 1e-12 * std::pow(scale, D - 1);

  std::vector<std::vector<char>> member;  // member[f][i]: point i lies on facet f
  std::array<int, D> idx;
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<double> dist(n);
  do {
    bool covered = false;
    for (const auto& m : member) {
      if (std::all_of(idx.begin(), idx.end(), [&](int i) { return m[i] != 0; })) {
        covered = true;
        break;
      }
    }
    if (covered) continue;

    Point<D> normal = cofactor_normal<D>(pts, idx);
    const double len = normal.norm();
    if (len <= normal_floor) continue;
    normal /= len;
    const double offset = normal.dot(pts[idx[0]]);

    bool above = false, below = false;
    for (int i = 0; i < n; ++i) {
      dist[i] = normal.dot(pts[i]) - offset;
      if (dist[i] > tol) above = true;
      if (dist[i] < -tol) below = true;
      if (above && below) break;
    }
    if (above && below) continue;
    if (!above && !below) throw degenerate_error("enumerate_facets: points are affinely degenerate");

    FacetPlane<D> f;
    f.normal = above ? Point<D>(-normal) : normal;
    f.offset = above ? -offset : offset;
    std::vector<char> on(n, 0);
    for (int i = 0; i < n; ++i) {
      if (std::abs(dist[i]) <= tol) {
        on[i] = 1;
        f.indices.push_back(i);
      }
    }
    if (static_cast<int>(f.indices.size()) > D) {
      // Least-squares plane through every on-plane point.
      Point<D> c = Point<D>::Zero();
      for (int i : f.indices) c += pts[i];
      c /= static_cast<double>(f.indices.size());
      Eigen::Matrix<double, D, Eigen::Dynamic> centered(D, f.indices.size());
      for (std::size_t j = 0; j < f.indices.size(); ++j) centered.col(j) = pts[f.indices[j]] - c;
      Eigen::JacobiSVD<Eigen::Matrix<double, D, Eigen::Dynamic>> svd(centered, Eigen::ComputeFullU);
      Point<D> refined = svd.matrixU().col(D - 1);
      if (refined.dot(f.normal) < 0.0) refined = -refined;
      f.normal = refined;
      f.offset = refined.dot(c);
    }
    facets.push_back(std::move(f));
    member.push_back(std::move(on));
  } while (next_combination(idx.data(), D, n));

  if (facets.size() < static_cast<std::size_t>(D + 1))
    throw degenerate_error("enumerate_facets: hull is not full-dimensional");
  return facets;
}

template <int D>
double hull_volume(const PointSet<D>& pts, double tol);

/// Area of the convex hull of planar points (monotone chain + shoelace).
inline double polygon_hull_area(PointSet<2> pts) {
  if (pts.size() < 3) return 0.0;
  std::sort(pts.begin(), pts.end(), [](const Point<2>& a, const Point<2>& b) {
    return a(0) < b(0) || (a(0) == b(0) && a(1) < b(1));
  });
  auto cross = [](const Point<2>& o, const Point<2>& a, const Point<2>& b) {
    return (a(0) - o(0)) * (b(1) - o(1)) - (a(1) - o(1)) * (b(0) - o(0));
  };
  const std::size_t n = pts.size();
  std::vector<Point<2>> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0.0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0.0) --k;
    h[k++] = pts[i];
  }
  double area2 = 0.0;
  for (std::size_t i = 0; i + 1 < k; ++i) area2 += h[i](0) * h[i + 1](1) - h[i + 1](0) * h[i](1);
  return 0.5 * std::abs(area2);
}

/// (D-1)-volume of one facet: its points expressed in an orthonormal basis of
/// the facet hyperplane, then measured one dimension down.
template <int D>
double facet_volume(const PointSet<D>& pts, const FacetPlane<D>& f, double tol) {
  const auto basis = complement_basis<D>(f.normal);
  PointSet<D - 1> local;
  local.reserve(f.indices.size());
  for (int i : f.indices) local.push_back(to_plane_coords<D>(basis, pts[i]));
  if constexpr (D - 1 == 1) {
    auto [lo, hi] = std::minmax_element(local.begin(), local.end(),
                                        [](const Point<1>& a, const Point<1>& b) { return a(0) < b(0); });
    return (*hi)(0) - (*lo)(0);
  } else {
    // Re-center so the sub-problem's tolerance stays relative to the facet.
    Point<D - 1> c = Point<D - 1>::Zero();
    for (const auto& p : local) c += p;
    c /= static_cast<double>(local.size());
    for (auto& p : local) p -= c;
    return hull_volume<D - 1>(local, tol);
  }
}

/// D-volume of conv(pts): cone decomposition over facets from the centroid,
/// V = (1/D) sum_f height_f * area_f.
template <int D>
double hull_volume(const PointSet<D>& pts, double tol) {
  if constexpr (D == 1) {
    double lo = pts.front()(0), hi = lo;
    for (const auto& p : pts) {
      lo = std::min(lo, p(0));
      hi = std::max(hi, p(0));
    }
    return hi - lo;
  } else if constexpr (D == 2) {
    (void)tol;
    return polygon_hull_area(pts);
  } else {
    Point<D> c = Point<D>::Zero();
    for (const auto& p : pts) c += p;
    c /= static_cast<double>(pts.size());
    double v = 0.0;
    for (const auto& f : enumerate_facets<D>(pts, tol)) v += (f.offset - f.normal.dot(c)) * facet_volume<D>(pts, f, tol);
    return v / D;
  }
}

}  // namespace cauchy::hull
