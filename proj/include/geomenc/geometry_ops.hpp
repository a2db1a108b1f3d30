#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geomenc/errors.hpp"
#include "geomenc/geometry.hpp"
#include "geomenc/rng.hpp"

namespace geomenc {

// Distance below which a point counts as lying on a boundary for the
// predicate operations. min_distance and the encoders do not use it.
inline constexpr double kBoundaryTol = 1e-9;

inline double point_segment_distance(Point2 p, Point2 a, Point2 b) {
  Point2 ab = b - a;
  double len2 = dot(ab, ab);
  if (len2 == 0) return distance(p, a);
  double t = dot(p - a, ab) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return distance(p, Point2{a.x + t * ab.x, a.y + t * ab.y});
}

inline bool point_on_segment(Point2 p, Point2 a, Point2 b,
                             double tol = kBoundaryTol) {
  return point_segment_distance(p, a, b) <= tol;
}

inline bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d) {
  return detail::segments_intersect(a, b, c, d);
}

// Transversal crossing of segment interiors.
inline bool segments_properly_cross(Point2 p1, Point2 p2, Point2 p3, Point2 p4) {
  double d1 = cross(p3, p4, p1);
  double d2 = cross(p3, p4, p2);
  double d3 = cross(p1, p2, p3);
  double d4 = cross(p1, p2, p4);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
         ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

namespace detail {

// Crossing parameters of segment (a,b) against segment (c,d), as fractions
// of (a,b). Collinear overlaps contribute nothing.
inline std::optional<double> crossing_param(Point2 a, Point2 b, Point2 c,
                                            Point2 d) {
  Point2 r = b - a, s = d - c;
  double denom = r.x * s.y - r.y * s.x;
  if (denom == 0) return std::nullopt;
  Point2 ca = c - a;
  double t = (ca.x * s.y - ca.y * s.x) / denom;
  double u = (ca.x * r.y - ca.y * r.x) / denom;
  if (t < 0 || t > 1 || u < 0 || u > 1) return std::nullopt;
  return t;
}

}  // namespace detail

inline bool point_on_ring(Point2 p, const Ring& r, double tol = kBoundaryTol) {
  for (std::size_t i = 0; i + 1 < r.size(); ++i)
    if (point_on_segment(p, r[i], r[i + 1], tol)) return true;
  return false;
}

enum class PolygonLocation { interior, boundary, exterior };

inline PolygonLocation locate_in_polygon(Point2 p, const PolygonData& pd,
                                         double tol = kBoundaryTol) {
  if (point_on_ring(p, pd.exterior, tol)) return PolygonLocation::boundary;
  for (const Ring& h : pd.holes)
    if (point_on_ring(p, h, tol)) return PolygonLocation::boundary;
  if (!detail::point_in_ring_parity(p, pd.exterior)) return PolygonLocation::exterior;
  for (const Ring& h : pd.holes)
    if (detail::point_in_ring_parity(p, h)) return PolygonLocation::exterior;
  return PolygonLocation::interior;
}

inline bool point_in_polygon_interior(Point2 p, const PolygonData& pd,
                                      double tol = kBoundaryTol) {
  return locate_in_polygon(p, pd, tol) == PolygonLocation::interior;
}

// Interior-or-boundary membership, with exact boundary handling (no
// tolerance): used by min_distance where the segment distance already covers
// near-boundary points.
inline bool point_in_polygon_closed(Point2 p, const PolygonData& pd) {
  auto on_ring_exact = [&](const Ring& r) {
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
      if (cross(r[i], r[i + 1], p) == 0 &&
          detail::on_segment_collinear(p, r[i], r[i + 1]))
        return true;
    }
    return false;
  };
  if (on_ring_exact(pd.exterior)) return true;
  for (const Ring& h : pd.holes)
    if (on_ring_exact(h)) return true;
  if (!detail::point_in_ring_parity(p, pd.exterior)) return false;
  for (const Ring& h : pd.holes)
    if (detail::point_in_ring_parity(p, h)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// min_distance

inline double min_distance(const Geometry& g, Point2 p) {
  double best = std::numeric_limits<double>::infinity();
  switch (g.kind()) {
    case GeometryKind::point:
      return distance(g.as_point(), p);
    case GeometryKind::multi_point:
      for (Point2 q : g.multi_points()) best = std::min(best, distance(q, p));
      return best;
    case GeometryKind::line_string:
    case GeometryKind::multi_line_string:
      g.for_each_segment([&](Point2 a, Point2 b) {
        best = std::min(best, point_segment_distance(p, a, b));
      });
      return best;
    case GeometryKind::polygon:
    case GeometryKind::multi_polygon: {
      for (const PolygonData& pd : g.polygon_parts()) {
        if (point_in_polygon_closed(p, pd)) return 0.0;
        for (std::size_t i = 0; i + 1 < pd.exterior.size(); ++i)
          best = std::min(best,
                          point_segment_distance(p, pd.exterior[i], pd.exterior[i + 1]));
        for (const Ring& h : pd.holes)
          for (std::size_t i = 0; i + 1 < h.size(); ++i)
            best = std::min(best, point_segment_distance(p, h[i], h[i + 1]));
      }
      return best;
    }
  }
  throw_error(ErrorCode::internal, "unreachable geometry kind");
}

// ---------------------------------------------------------------------------
// Pairwise spatial relationships

enum class RelationKind {
  point_in_polygon,
  point_on_line_string,
  line_line_intersect,
  line_intersects_polygon,
  polygon_intersects_polygon,
  polygon_borders_polygon,
};

inline const char* to_string(RelationKind k) {
  switch (k) {
    case RelationKind::point_in_polygon: return "point-in-polygon";
    case RelationKind::point_on_line_string: return "point-on-linestring";
    case RelationKind::line_line_intersect: return "linestring-intersects-linestring";
    case RelationKind::line_intersects_polygon: return "linestring-intersects-polygon";
    case RelationKind::polygon_intersects_polygon: return "polygon-intersects-polygon";
    case RelationKind::polygon_borders_polygon: return "polygon-borders-polygon";
  }
  return "?";
}

inline std::optional<RelationKind> relation_from_string(std::string_view s) {
  for (RelationKind k :
       {RelationKind::point_in_polygon, RelationKind::point_on_line_string,
        RelationKind::line_line_intersect, RelationKind::line_intersects_polygon,
        RelationKind::polygon_intersects_polygon,
        RelationKind::polygon_borders_polygon}) {
    if (s == to_string(k)) return k;
  }
  return std::nullopt;
}

namespace detail {

// A point strictly inside the polygon, found by scanning a horizontal line
// between boundary crossings. Deterministic; works for any valid polygon.
inline Point2 representative_interior_point(const PolygonData& pd) {
  std::vector<double> ys;
  for (std::size_t i = 0; i + 1 < pd.exterior.size(); ++i)
    ys.push_back(pd.exterior[i].y);
  std::sort(ys.begin(), ys.end());
  auto try_scan = [&](double y) -> std::optional<Point2> {
    std::vector<double> xs;
    auto scan_ring = [&](const Ring& r) {
      for (std::size_t i = 0; i + 1 < r.size(); ++i) {
        Point2 a = r[i], b = r[i + 1];
        if ((a.y > y) != (b.y > y))
          xs.push_back(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
      }
    };
    scan_ring(pd.exterior);
    for (const Ring& h : pd.holes) scan_ring(h);
    if (xs.size() < 2) return std::nullopt;
    std::sort(xs.begin(), xs.end());
    double best_width = 0;
    Point2 best{};
    for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
      double w = xs[i + 1] - xs[i];
      if (w > best_width) {
        best_width = w;
        best = Point2{(xs[i] + xs[i + 1]) / 2, y};
      }
    }
    if (best_width <= 0) return std::nullopt;
    if (locate_in_polygon(best, pd, 0.0) != PolygonLocation::interior)
      return std::nullopt;
    return best;
  };
  for (std::size_t i = 0; i + 1 < ys.size(); ++i) {
    if (ys[i + 1] <= ys[i]) continue;
    if (auto p = try_scan((ys[i] + ys[i + 1]) / 2)) return *p;
  }
  throw_error(ErrorCode::internal, "no interior point found for polygon");
}

// True when any part of the open segment (a,b), split at boundary crossings,
// lies strictly inside the polygon.
inline bool segment_passes_through_interior(Point2 a, Point2 b,
                                            const PolygonData& pd) {
  std::vector<double> ts{0.0, 1.0};
  auto collect = [&](const Ring& r) {
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
      if (auto t = crossing_param(a, b, r[i], r[i + 1])) ts.push_back(*t);
  };
  collect(pd.exterior);
  for (const Ring& h : pd.holes) collect(h);
  std::sort(ts.begin(), ts.end());
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    double tm = (ts[i] + ts[i + 1]) / 2;
    if (ts[i + 1] - ts[i] <= 1e-12) continue;
    Point2 m{a.x + tm * (b.x - a.x), a.y + tm * (b.y - a.y)};
    if (point_in_polygon_interior(m, pd)) return true;
  }
  return false;
}

inline bool line_vertices(const Geometry& g, std::vector<Point2>& out) {
  if (g.kind() == GeometryKind::line_string) {
    out = g.line_vertices();
    return true;
  }
  return false;
}

inline bool interiors_overlap(const PolygonData& a, const PolygonData& b) {
  for (std::size_t i = 0; i + 1 < a.exterior.size(); ++i)
    if (point_in_polygon_interior(a.exterior[i], b)) return true;
  for (std::size_t i = 0; i + 1 < b.exterior.size(); ++i)
    if (point_in_polygon_interior(b.exterior[i], a)) return true;
  auto any_proper_cross = [](const Ring& r1, const Ring& r2) {
    for (std::size_t i = 0; i + 1 < r1.size(); ++i)
      for (std::size_t j = 0; j + 1 < r2.size(); ++j)
        if (segments_properly_cross(r1[i], r1[i + 1], r2[j], r2[j + 1]))
          return true;
    return false;
  };
  if (any_proper_cross(a.exterior, b.exterior)) return true;
  for (const Ring& h : b.holes)
    if (any_proper_cross(a.exterior, h)) return true;
  for (const Ring& h : a.holes)
    if (any_proper_cross(h, b.exterior)) return true;
  // Boundary-aligned configurations: test sub-segment midpoints.
  for (std::size_t i = 0; i + 1 < a.exterior.size(); ++i)
    if (segment_passes_through_interior(a.exterior[i], a.exterior[i + 1], b))
      return true;
  for (std::size_t i = 0; i + 1 < b.exterior.size(); ++i)
    if (segment_passes_through_interior(b.exterior[i], b.exterior[i + 1], a))
      return true;
  // Containment with every vertex on the other boundary, or identical rings.
  if (point_in_polygon_interior(representative_interior_point(a), b)) return true;
  if (point_in_polygon_interior(representative_interior_point(b), a)) return true;
  return false;
}

// Shared boundary of positive length: some pair of edges is collinear within
// tolerance with overlapping extent.
inline bool boundaries_share_segment(const PolygonData& a, const PolygonData& b,
                                     double tol = kBoundaryTol) {
  auto rings_of = [](const PolygonData& pd) {
    std::vector<const Ring*> rs{&pd.exterior};
    for (const Ring& h : pd.holes) rs.push_back(&h);
    return rs;
  };
  for (const Ring* ra : rings_of(a)) {
    for (std::size_t i = 0; i + 1 < ra->size(); ++i) {
      Point2 p = (*ra)[i], q = (*ra)[i + 1];
      Point2 d = q - p;
      double len = std::sqrt(dot(d, d));
      for (const Ring* rb : rings_of(b)) {
        for (std::size_t j = 0; j + 1 < rb->size(); ++j) {
          Point2 u = (*rb)[j], v = (*rb)[j + 1];
          double du = std::abs(cross(p, q, u)) / len;
          double dv = std::abs(cross(p, q, v)) / len;
          if (du > tol || dv > tol) continue;
          // Collinear; check 1-D overlap along the edge direction.
          double tu = dot(u - p, d) / (len * len);
          double tv = dot(v - p, d) / (len * len);
          double lo = std::max(0.0, std::min(tu, tv));
          double hi = std::min(1.0, std::max(tu, tv));
          if ((hi - lo) * len > tol) return true;
        }
      }
    }
  }
  return false;
}

}  // namespace detail

inline bool relation(RelationKind kind, const Geometry& a, const Geometry& b) {
  auto require = [&](GeometryKind ka, GeometryKind kb) {
    if (a.kind() != ka || b.kind() != kb)
      throw_error(ErrorCode::argument,
                  std::string(to_string(kind)) + " expects (" + to_string(ka) +
                      ", " + to_string(kb) + "), got (" + to_string(a.kind()) +
                      ", " + to_string(b.kind()) + ")");
  };
  switch (kind) {
    case RelationKind::point_in_polygon: {
      require(GeometryKind::point, GeometryKind::polygon);
      return point_in_polygon_interior(a.as_point(), b.polygon_data());
    }
    case RelationKind::point_on_line_string: {
      require(GeometryKind::point, GeometryKind::line_string);
      Point2 p = a.as_point();
      const auto& v = b.line_vertices();
      for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (point_on_segment(p, v[i], v[i + 1])) return true;
      return false;
    }
    case RelationKind::line_line_intersect: {
      require(GeometryKind::line_string, GeometryKind::line_string);
      const auto& va = a.line_vertices();
      const auto& vb = b.line_vertices();
      for (std::size_t i = 0; i + 1 < va.size(); ++i)
        for (std::size_t j = 0; j + 1 < vb.size(); ++j)
          if (segments_intersect(va[i], va[i + 1], vb[j], vb[j + 1])) return true;
      return false;
    }
    case RelationKind::line_intersects_polygon: {
      require(GeometryKind::line_string, GeometryKind::polygon);
      const auto& v = a.line_vertices();
      const PolygonData& pd = b.polygon_data();
      for (Point2 p : v)
        if (point_in_polygon_interior(p, pd)) return true;
      for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (detail::segment_passes_through_interior(v[i], v[i + 1], pd))
          return true;
      return false;
    }
    case RelationKind::polygon_intersects_polygon: {
      require(GeometryKind::polygon, GeometryKind::polygon);
      return detail::interiors_overlap(a.polygon_data(), b.polygon_data());
    }
    case RelationKind::polygon_borders_polygon: {
      require(GeometryKind::polygon, GeometryKind::polygon);
      return detail::boundaries_share_segment(a.polygon_data(), b.polygon_data()) &&
             !detail::interiors_overlap(a.polygon_data(), b.polygon_data());
    }
  }
  throw_error(ErrorCode::internal, "unreachable relation kind");
}

// ---------------------------------------------------------------------------
// Scalar shape metrics

inline double length(const Geometry& g) {
  if (g.kind() != GeometryKind::line_string)
    throw_error(ErrorCode::argument, std::string("length expects LineString, got ") +
                                         to_string(g.kind()));
  const auto& v = g.line_vertices();
  double total = 0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) total += distance(v[i], v[i + 1]);
  return total;
}

inline double ring_signed_area(const Ring& r) {
  double s = 0;
  for (std::size_t i = 0; i + 1 < r.size(); ++i)
    s += r[i].x * r[i + 1].y - r[i + 1].x * r[i].y;
  return s / 2;
}

inline double area(const Geometry& g) {
  if (g.kind() != GeometryKind::polygon)
    throw_error(ErrorCode::argument,
                std::string("area expects Polygon, got ") + to_string(g.kind()));
  const PolygonData& pd = g.polygon_data();
  double a = std::abs(ring_signed_area(pd.exterior));
  for (const Ring& h : pd.holes) a -= std::abs(ring_signed_area(h));
  return std::max(a, 0.0);
}

// Monotone-chain convex hull; returns CCW vertices without a closing
// duplicate. Collinear points on the hull boundary are dropped.
inline std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(),
            [](Point2 a, Point2 b) { return lex_less(a, b); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<Point2> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

inline std::vector<Point2> all_vertices(const Geometry& g) {
  std::vector<Point2> v;
  v.reserve(g.vertex_count());
  g.for_each_vertex([&](const Point2& p) { v.push_back(p); });
  return v;
}

// Most distant pair of vertices. The diameter of a polyline or polygon is
// always realized at vertices, so this equals the true farthest pair of the
// shape. Ties resolve to the lexicographically smallest (p, q), p <= q.
inline std::pair<Point2, Point2> farthest_pair(const Geometry& g) {
  std::vector<Point2> v = all_vertices(g);
  if (v.empty()) throw_error(ErrorCode::argument, "farthest_pair on empty geometry");
  std::pair<Point2, Point2> best{v[0], v[0]};
  double best_d = -1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i; j < v.size(); ++j) {
      Point2 p = v[i], q = v[j];
      if (lex_less(q, p)) std::swap(p, q);
      double d = sq_distance(p, q);
      if (d > best_d) {
        best_d = d;
        best = {p, q};
      } else if (d == best_d) {
        auto lex_pair_less = [](const std::pair<Point2, Point2>& x,
                                const std::pair<Point2, Point2>& y) {
          if (x.first == y.first) return lex_less(x.second, y.second);
          return lex_less(x.first, y.first);
        };
        if (lex_pair_less({p, q}, best)) best = {p, q};
      }
    }
  }
  return best;
}

// Angle of the farthest-pair direction folded into [0, pi). Degenerate
// geometries (all vertices coincident) map to 0.
inline double orientation_angle(const Geometry& g) {
  auto [p, q] = farthest_pair(g);
  if (p == q) return 0.0;
  double a = std::atan2(q.y - p.y, q.x - p.x);
  const double pi = std::numbers::pi;
  a = std::fmod(a, pi);
  if (a < 0) a += pi;
  if (a >= pi) a -= pi;
  return a;
}

// 1 - exp(-r/r* + 1), r = arc length, r* = endpoint separation. Straight
// segments give 0; closed polylines (r* = 0) give 1 as the limit value.
inline double sinuosity(const Geometry& g) {
  double r = length(g);  // also enforces the LineString kind
  const auto& v = g.line_vertices();
  double r_star = distance(v.front(), v.back());
  if (r_star == 0) return 1.0;
  return 1.0 - std::exp(-r / r_star + 1.0);
}

// Convex Hull Area Ratio: area / hull area, in (0, 1] for valid polygons.
inline double char_ratio(const Geometry& g) {
  double a = area(g);
  if (a <= 0) throw_error(ErrorCode::domain, "char_ratio needs positive area");
  std::vector<Point2> hull = convex_hull(all_vertices(g));
  Ring hull_ring(hull.begin(), hull.end());
  hull_ring.push_back(hull.front());
  double ha = std::abs(ring_signed_area(hull_ring));
  return a / ha;
}

// ---------------------------------------------------------------------------
// Transforms

inline Geometry map_vertices(const Geometry& g, auto&& f) {
  switch (g.kind()) {
    case GeometryKind::point:
      return Geometry::point(f(g.as_point()));
    case GeometryKind::line_string: {
      std::vector<Point2> v;
      v.reserve(g.line_vertices().size());
      for (Point2 p : g.line_vertices()) v.push_back(f(p));
      return Geometry::line_string(std::move(v));
    }
    case GeometryKind::multi_point: {
      std::vector<Point2> v;
      for (Point2 p : g.multi_points()) v.push_back(f(p));
      return Geometry::multi_point(std::move(v));
    }
    case GeometryKind::multi_line_string: {
      std::vector<std::vector<Point2>> parts;
      for (const auto& part : g.line_parts()) {
        std::vector<Point2> v;
        v.reserve(part.size());
        for (Point2 p : part) v.push_back(f(p));
        parts.push_back(std::move(v));
      }
      return Geometry::multi_line_string(std::move(parts));
    }
    case GeometryKind::polygon:
    case GeometryKind::multi_polygon: {
      std::vector<PolygonData> parts;
      for (const PolygonData& pd : g.polygon_parts()) {
        PolygonData out;
        out.exterior.reserve(pd.exterior.size());
        for (Point2 p : pd.exterior) out.exterior.push_back(f(p));
        for (const Ring& h : pd.holes) {
          Ring oh;
          oh.reserve(h.size());
          for (Point2 p : h) oh.push_back(f(p));
          out.holes.push_back(std::move(oh));
        }
        parts.push_back(std::move(out));
      }
      if (g.kind() == GeometryKind::polygon)
        return Geometry::polygon(std::move(parts[0].exterior),
                                 std::move(parts[0].holes));
      return Geometry::multi_polygon(std::move(parts));
    }
  }
  throw_error(ErrorCode::internal, "unreachable geometry kind");
}

inline Geometry translate(const Geometry& g, double dx, double dy) {
  return map_vertices(g, [&](Point2 p) { return Point2{p.x + dx, p.y + dy}; });
}

inline Geometry transform(const Geometry& g, const AffineTransform& t) {
  if (!(t.scale > 0))
    throw_error(ErrorCode::validation, "transform scale must be > 0");
  Point2 c = g.vertex_centroid();
  double cs = std::cos(t.rotation), sn = std::sin(t.rotation);
  return map_vertices(g, [&](Point2 p) {
    double x = (p.x - c.x) * t.scale;
    double y = (p.y - c.y) * t.scale;
    return Point2{c.x + x * cs - y * sn + t.dx, c.y + x * sn + y * cs + t.dy};
  });
}

struct NormalizeParams {
  double min_scale = 0;  // absolute lower bound on the drawn scale
  double max_scale = std::numeric_limits<double>::infinity();
  double min_rel = 0.05;  // lower bound relative to the largest fitting scale
};

// Random rotation, log-uniform scale that keeps the shape within the frame,
// and uniform placement of the bounding box inside the frame. Draw order is
// rotation, scale, dx, dy.
inline Geometry normalize_to_frame(const Geometry& g, const Frame& f, Rng& rng,
                                   const NormalizeParams& params = {}) {
  double theta = rng.uniform(0, 2 * std::numbers::pi);
  Geometry rotated = transform(g, AffineTransform{theta, 1.0, 0, 0});
  Frame bb = rotated.bounds();
  double w = bb.max_x - bb.min_x, h = bb.max_y - bb.min_y;
  double scale = 1.0;
  if (w > 0 || h > 0) {
    double fit = std::min(w > 0 ? f.width() / w : std::numeric_limits<double>::infinity(),
                          h > 0 ? f.height() / h : std::numeric_limits<double>::infinity());
    double hi = std::min(params.max_scale, fit);
    double lo = std::max(params.min_scale, fit * params.min_rel);
    if (!(lo <= hi))
      throw_error(ErrorCode::domain, "shape cannot fit in frame at minimum scale");
    scale = rng.log_uniform(lo, hi);
  }
  Geometry scaled = transform(rotated, AffineTransform{0, scale, 0, 0});
  Frame sb = scaled.bounds();
  double dx_lo = f.min_x - sb.min_x, dx_hi = f.max_x - sb.max_x;
  double dy_lo = f.min_y - sb.min_y, dy_hi = f.max_y - sb.max_y;
  if (dx_hi < dx_lo) dx_hi = dx_lo;  // exact fit, rounding slack
  if (dy_hi < dy_lo) dy_hi = dy_lo;
  double dx = rng.uniform(dx_lo, dx_hi);
  double dy = rng.uniform(dy_lo, dy_hi);
  return translate(scaled, dx, dy);
}

}  // namespace geomenc
