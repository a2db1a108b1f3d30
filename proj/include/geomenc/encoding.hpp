#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "geomenc/errors.hpp"
#include "geomenc/geometry.hpp"
#include "geomenc/geometry_ops.hpp"
#include "geomenc/grid.hpp"

namespace geomenc {

struct MppConfig {
  ReferenceGrid grid;
  double s = 0;  // kernel length scale; defaults to the grid spacing

  static MppConfig make(ReferenceGrid grid, double s = 0) {
    if (s == 0) s = grid.spacing;
    if (!(s > 0)) throw_error(ErrorCode::config, "MPP scale factor must be > 0");
    return MppConfig{std::move(grid), s};
  }
};

struct DenseEncoding {
  std::vector<double> values;
  std::string grid_id;

  std::size_t size() const { return values.size(); }
};

struct SparseEncoding {
  std::vector<std::size_t> indices;  // strictly increasing
  std::vector<double> values;        // matching nonzero entries
  std::size_t length = 0;
  std::string grid_id;
};

// Element i = exp(-dist(g, r_i) / s); every element lies in (0, 1].
inline DenseEncoding mpp_encode(const Geometry& g, const MppConfig& cfg) {
  DenseEncoding e;
  e.grid_id = cfg.grid.id;
  e.values.reserve(cfg.grid.points.size());
  for (Point2 r : cfg.grid.points)
    e.values.push_back(std::exp(-min_distance(g, r) / cfg.s));
  return e;
}

namespace detail {

// Inclusive segment/rectangle intersection (Liang-Barsky slabs).
inline bool segment_intersects_rect(Point2 a, Point2 b, const Frame& r) {
  double t0 = 0, t1 = 1;
  double dx = b.x - a.x, dy = b.y - a.y;
  auto clip = [&](double p, double q) {
    if (p == 0) return q >= 0;
    double t = q / p;
    if (p < 0) {
      if (t > t1) return false;
      if (t > t0) t0 = t;
    } else {
      if (t < t0) return false;
      if (t < t1) t1 = t;
    }
    return true;
  };
  return clip(-dx, a.x - r.min_x) && clip(dx, r.max_x - a.x) &&
         clip(-dy, a.y - r.min_y) && clip(dy, r.max_y - a.y) && t0 <= t1;
}

inline bool polygon_intersects_rect(const PolygonData& pd, const Frame& r) {
  for (std::size_t i = 0; i + 1 < pd.exterior.size(); ++i)
    if (r.contains(pd.exterior[i])) return true;
  const Point2 corners[4] = {{r.min_x, r.min_y},
                             {r.max_x, r.min_y},
                             {r.max_x, r.max_y},
                             {r.min_x, r.max_y}};
  for (Point2 c : corners)
    if (point_in_polygon_closed(c, pd)) return true;
  auto ring_hits = [&](const Ring& ring) {
    for (std::size_t i = 0; i + 1 < ring.size(); ++i)
      if (segment_intersects_rect(ring[i], ring[i + 1], r)) return true;
    return false;
  };
  if (ring_hits(pd.exterior)) return true;
  for (const Ring& h : pd.holes)
    if (ring_hits(h)) return true;
  return false;
}

inline bool geometry_intersects_rect(const Geometry& g, const Frame& r) {
  switch (g.kind()) {
    case GeometryKind::point:
      return r.contains(g.as_point());
    case GeometryKind::multi_point: {
      for (Point2 p : g.multi_points())
        if (r.contains(p)) return true;
      return false;
    }
    case GeometryKind::line_string:
    case GeometryKind::multi_line_string: {
      bool hit = false;
      g.for_each_segment([&](Point2 a, Point2 b) {
        if (!hit && segment_intersects_rect(a, b, r)) hit = true;
      });
      return hit;
    }
    case GeometryKind::polygon:
    case GeometryKind::multi_polygon: {
      for (const PolygonData& pd : g.polygon_parts())
        if (polygon_intersects_rect(pd, r)) return true;
      return false;
    }
  }
  throw_error(ErrorCode::internal, "unreachable geometry kind");
}

}  // namespace detail

// Element i = 1 iff g intersects the closed tile t_i; a geometry touching
// only a shared tile edge lights both tiles.
inline DenseEncoding div_encode(const Geometry& g, const TileGrid& grid) {
  DenseEncoding e;
  e.grid_id = grid.id;
  e.values.reserve(grid.tiles.size());
  for (const Frame& t : grid.tiles)
    e.values.push_back(detail::geometry_intersects_rect(g, t) ? 1.0 : 0.0);
  return e;
}

// Drops zeros and everything below the threshold.
inline SparseEncoding sparsify(const DenseEncoding& e, double threshold) {
  if (!(threshold >= 0 && threshold < 1))
    throw_error(ErrorCode::argument, "sparsify threshold must lie in [0, 1)");
  SparseEncoding s;
  s.length = e.values.size();
  s.grid_id = e.grid_id;
  for (std::size_t i = 0; i < e.values.size(); ++i) {
    double v = e.values[i];
    if (v == 0 || v < threshold) continue;
    s.indices.push_back(i);
    s.values.push_back(v);
  }
  return s;
}

inline DenseEncoding densify(const SparseEncoding& s) {
  DenseEncoding e;
  e.grid_id = s.grid_id;
  e.values.assign(s.length, 0.0);
  for (std::size_t k = 0; k < s.indices.size(); ++k) {
    if (s.indices[k] >= s.length)
      throw_error(ErrorCode::validation, "sparse index out of range");
    e.values[s.indices[k]] = s.values[k];
  }
  return e;
}

// Radius of the exclusion zone implied by one MPP element: the algebraic
// inverse of the kernel, d = -s ln(v).
inline double exclusion_radius(double v, double s) {
  if (!(v > 0 && v <= 1))
    throw_error(ErrorCode::domain, "encoding element must lie in (0, 1]");
  if (!(s > 0)) throw_error(ErrorCode::domain, "scale factor must be > 0");
  return -s * std::log(v);
}

struct DecodeResult {
  Point2 point;
  double residual = 0;  // max |dist(point, r_i) - d_i|
};

// Recovers a Point geometry from its MPP encoding by multilateration:
// linearized least squares over the exclusion circles followed by one
// Gauss-Newton refinement.
inline DecodeResult decode_point(const DenseEncoding& e, const MppConfig& cfg,
                                 double residual_tol = 1e-6) {
  const std::size_t n = cfg.grid.points.size();
  if (e.values.size() != n)
    throw_error(ErrorCode::argument, "encoding length does not match grid");
  if (!e.grid_id.empty() && e.grid_id != cfg.grid.id)
    throw_error(ErrorCode::argument, "encoding was produced by a different grid");
  if (n < 3)
    throw_error(ErrorCode::domain,
                "decode_point needs >= 3 non-collinear reference points");

  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i)
    d[i] = exclusion_radius(e.values[i], cfg.s);

  // Subtracting circle 0 from circle i gives a linear equation in (x, y):
  //   2 (r_i - r_0) . x = d_0^2 - d_i^2 + |r_i|^2 - |r_0|^2
  const Point2 r0 = cfg.grid.points[0];
  Eigen::MatrixXd A(n - 1, 2);
  Eigen::VectorXd rhs(n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    Point2 ri = cfg.grid.points[i];
    A(static_cast<Eigen::Index>(i - 1), 0) = 2 * (ri.x - r0.x);
    A(static_cast<Eigen::Index>(i - 1), 1) = 2 * (ri.y - r0.y);
    rhs(static_cast<Eigen::Index>(i - 1)) =
        d[0] * d[0] - d[i] * d[i] + (ri.x * ri.x + ri.y * ri.y) -
        (r0.x * r0.x + r0.y * r0.y);
  }
  Eigen::Matrix2d ata = A.transpose() * A;
  // Collinear reference points leave the normal matrix singular.
  double scale2 = ata.trace();
  if (std::abs(ata.determinant()) <= 1e-12 * scale2 * scale2)
    throw_error(ErrorCode::domain,
                "reference points are collinear; decode is under-determined");
  Eigen::Vector2d x = ata.ldlt().solve(A.transpose() * rhs);

  // One Gauss-Newton step on f_i = |x - r_i| - d_i. Terms with |x - r_i|
  // near zero have no usable gradient and a tiny residual anyway.
  Eigen::Matrix2d jtj = Eigen::Matrix2d::Zero();
  Eigen::Vector2d jtf = Eigen::Vector2d::Zero();
  for (std::size_t i = 0; i < n; ++i) {
    Point2 ri = cfg.grid.points[i];
    double ux = x(0) - ri.x, uy = x(1) - ri.y;
    double dist_i = std::sqrt(ux * ux + uy * uy);
    if (dist_i < 1e-12) continue;
    double f = dist_i - d[i];
    Eigen::Vector2d jrow(ux / dist_i, uy / dist_i);
    jtj += jrow * jrow.transpose();
    jtf += jrow * f;
  }
  if (std::abs(jtj.determinant()) > 1e-12) x -= jtj.ldlt().solve(jtf);

  DecodeResult out{{x(0), x(1)}, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    double dist_i = distance(out.point, cfg.grid.points[i]);
    out.residual = std::max(out.residual, std::abs(dist_i - d[i]));
  }
  if (out.residual > residual_tol)
    throw_error(ErrorCode::domain,
                "inconsistent encoding: multilateration residual " +
                    std::to_string(out.residual) + " exceeds tolerance");
  return out;
}

}  // namespace geomenc
