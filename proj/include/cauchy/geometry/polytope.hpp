#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "cauchy/errors.hpp"
#include "cauchy/geometry/direction.hpp"
#include "cauchy/geometry/hull.hpp"

namespace cauchy {

inline constexpr int kMinPolytopeDim = 2;
inline constexpr int kMaxPolytopeDim = 4;

/// Relative tolerance for coplanarity, duplicate points and rank decisions.
inline constexpr double kGeometryTolerance = 1e-9;

/// Calls `f(std::integral_constant<int, D>{})` for the runtime dimension d in [2, 4].
template <class F>
decltype(auto) dispatch_dim(int d, F&& f) {
  switch (d) {
    case 2: return std::forward<F>(f)(std::integral_constant<int, 2>{});
    case 3: return std::forward<F>(f)(std::integral_constant<int, 3>{});
    case 4: return std::forward<F>(f)(std::integral_constant<int, 4>{});
    default:
      throw domain_error("dimension " + std::to_string(d) + " outside the supported range [2, 4]");
  }
}

struct Facet {
  std::vector<int> vertex_indices;
  Direction unit_normal;  // outward
  double offset;          // unit_normal . v == offset for every listed vertex
};

/// Full-dimensional convex polytope in R^d (2 <= d <= 4), stored as its
/// extreme vertices. Non-extreme and duplicate input points are dropped at
/// construction; `dropped_points()` records how many.
class Polytope {
 public:
  Polytope(std::vector<Eigen::VectorXd> points, std::string label = {}) : label_(std::move(label)) {
    if (points.empty()) throw degenerate_error("Polytope: no vertices");
    dim_ = static_cast<int>(points.front().size());
    if (dim_ < kMinPolytopeDim || dim_ > kMaxPolytopeDim)
      throw domain_error("Polytope: dimension must be in [2, 4], got " + std::to_string(dim_));
    for (const auto& p : points) {
      if (p.size() != dim_) throw dimension_mismatch("Polytope: vertices have mixed dimensions");
      if (!p.allFinite()) throw domain_error("Polytope: non-finite coordinate");
    }
    dispatch_dim(dim_, [&](auto tag) { build<decltype(tag)::value>(std::move(points)); });
  }

  int dim() const noexcept { return dim_; }
  const std::vector<Eigen::VectorXd>& vertices() const noexcept { return vertices_; }
  const std::vector<Facet>& facets() const noexcept { return facets_; }
  const std::string& label() const noexcept { return label_; }
  std::size_t dropped_points() const noexcept { return dropped_; }
  const Eigen::VectorXd& centroid() const noexcept { return centroid_; }
  /// Absolute tolerance used for every geometric decision on this polytope.
  double tolerance() const noexcept { return tol_; }

 private:
  template <int D>
  void build(std::vector<Eigen::VectorXd> points) {
    const std::size_t n_in = points.size();
    if (n_in < static_cast<std::size_t>(D + 1))
      throw degenerate_error("Polytope: need at least " + std::to_string(D + 1) + " vertices in R^" +
                             std::to_string(D) + ", got " + std::to_string(n_in));

    Eigen::VectorXd c = Eigen::VectorXd::Zero(D);
    for (const auto& p : points) c += p;
    c /= static_cast<double>(n_in);
    double scale = 0.0;
    for (const auto& p : points) scale = std::max(scale, (p - c).norm());
    if (!(scale > 0.0)) throw degenerate_error("Polytope: all vertices coincide");
    tol_ = kGeometryTolerance * scale;

    // Merge duplicates (first occurrence wins).
    std::vector<Eigen::VectorXd> unique;
    for (auto& p : points) {
      bool dup = false;
      for (const auto& q : unique) {
        if ((p - q).norm() <= tol_) {
          dup = true;
          break;
        }
      }
      if (!dup) unique.push_back(std::move(p));
    }

    // Affine rank via singular values of the centered vertex matrix.
    Eigen::MatrixXd centered(D, unique.size());
    for (std::size_t j = 0; j < unique.size(); ++j) centered.col(j) = unique[j] - c;
    const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(centered).singularValues();
    if (sv(D - 1) <= kGeometryTolerance * sv(0))
      throw degenerate_error("Polytope: vertices do not span R^" + std::to_string(D) + " (affine rank < d)");

    auto local = [&](const std::vector<Eigen::VectorXd>& pts) {
      hull::PointSet<D> out;
      out.reserve(pts.size());
      for (const auto& p : pts) out.push_back(hull::Point<D>(p - c));
      return out;
    };

    auto planes = hull::enumerate_facets<D>(local(unique), tol_);

    // A point is a vertex iff the normals of the facets through it span R^D.
    std::vector<Eigen::VectorXd> extreme;
    for (std::size_t i = 0; i < unique.size(); ++i) {
      Eigen::MatrixXd normals(D, 0);
      for (const auto& f : planes) {
        if (std::binary_search(f.indices.begin(), f.indices.end(), static_cast<int>(i))) {
          normals.conservativeResize(D, normals.cols() + 1);
          normals.col(normals.cols() - 1) = f.normal;
        }
      }
      if (normals.cols() < D) continue;
      const Eigen::VectorXd s = Eigen::JacobiSVD<Eigen::MatrixXd>(normals).singularValues();
      if (s(D - 1) > kGeometryTolerance * s(0)) extreme.push_back(unique[i]);
    }
    dropped_ = n_in - extreme.size();
    if (extreme.size() != unique.size()) planes = hull::enumerate_facets<D>(local(extreme), tol_);

    vertices_ = std::move(extreme);
    centroid_ = Eigen::VectorXd::Zero(D);
    for (const auto& p : vertices_) centroid_ += p;
    centroid_ /= static_cast<double>(vertices_.size());

    facets_.clear();
    for (const auto& f : planes) {
      const Eigen::VectorXd normal = f.normal;
      facets_.push_back(Facet{f.indices, Direction::normalized(normal), f.offset + normal.dot(c)});
    }
  }

  int dim_ = 0;
  std::vector<Eigen::VectorXd> vertices_;
  std::vector<Facet> facets_;
  std::string label_;
  std::size_t dropped_ = 0;
  Eigen::VectorXd centroid_;
  double tol_ = 0.0;
};

/// The facet list of `p` (computed at construction).
inline const std::vector<Facet>& facets(const Polytope& p) { return p.facets(); }

/// Vertices of the cube [0, side]^d.
inline std::vector<Eigen::VectorXd> cube_vertices(int d, double side = 1.0) {
  std::vector<Eigen::VectorXd> out;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    Eigen::VectorXd v(d);
    for (int i = 0; i < d; ++i) v(i) = (mask >> i) & 1u ? side : 0.0;
    out.push_back(v);
  }
  return out;
}

/// Vertices +-e_i of the cross-polytope in R^d.
inline std::vector<Eigen::VectorXd> cross_polytope_vertices(int d) {
  std::vector<Eigen::VectorXd> out;
  for (int i = 0; i < d; ++i) {
    for (double s : {1.0, -1.0}) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(d);
      v(i) = s;
      out.push_back(v);
    }
  }
  return out;
}

/// Regular simplex in R^d with unit edge length.
inline std::vector<Eigen::VectorXd> regular_simplex_vertices(int d) {
  // Standard basis of R^{d+1} lies in the hyperplane sum(x) = 1 with edge sqrt(2);
  // rotate that hyperplane onto R^d and rescale.
  const Eigen::VectorXd n = Eigen::VectorXd::Constant(d + 1, 1.0 / std::sqrt(d + 1.0));
  Eigen::VectorXd v = n;
  v(0) += 1.0;
  const Eigen::MatrixXd h = Eigen::MatrixXd::Identity(d + 1, d + 1) - (2.0 / v.squaredNorm()) * (v * v.transpose());
  const Eigen::MatrixXd basis = h.rightCols(d);
  std::vector<Eigen::VectorXd> out;
  for (int i = 0; i <= d; ++i) out.push_back(basis.row(i).transpose() / std::sqrt(2.0));
  return out;
}

}  // namespace cauchy
