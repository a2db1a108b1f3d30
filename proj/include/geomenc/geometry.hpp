#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "geomenc/errors.hpp"

namespace geomenc {

struct Point2 {
  double x = 0;
  double y = 0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(Point2 a, double k) { return {a.x * k, a.y * k}; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
// z-component of (a-o) x (b-o)
inline double cross(Point2 o, Point2 a, Point2 b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}
inline double sq_distance(Point2 a, Point2 b) {
  double dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}
inline double distance(Point2 a, Point2 b) { return std::sqrt(sq_distance(a, b)); }

inline bool lex_less(Point2 a, Point2 b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

// Rectangular region of interest. Also reused as a plain axis-aligned box
// (grid tiles, bounding boxes).
struct Frame {
  double min_x = 0, min_y = 0, max_x = 0, max_y = 0;

  static Frame make(double min_x, double min_y, double max_x, double max_y) {
    if (!(std::isfinite(min_x) && std::isfinite(min_y) && std::isfinite(max_x) &&
          std::isfinite(max_y)))
      throw_error(ErrorCode::validation, "frame coordinates must be finite");
    if (!(max_x > min_x && max_y > min_y))
      throw_error(ErrorCode::validation, "frame must have positive extent");
    return Frame{min_x, min_y, max_x, max_y};
  }

  double width() const { return max_x - min_x; }
  double height() const { return max_y - min_y; }

  bool contains(Point2 p) const {
    return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
  }
  bool contains(const Frame& b) const {
    return b.min_x >= min_x && b.max_x <= max_x && b.min_y >= min_y &&
           b.max_y <= max_y;
  }

  friend bool operator==(const Frame&, const Frame&) = default;
};

// Similarity transform: scale, then rotation about the geometry's vertex
// centroid, then translation.
struct AffineTransform {
  double rotation = 0;  // radians
  double scale = 1;     // > 0
  double dx = 0;
  double dy = 0;
};

enum class GeometryKind {
  point,
  line_string,
  polygon,
  multi_point,
  multi_line_string,
  multi_polygon,
};

inline const char* to_string(GeometryKind k) {
  switch (k) {
    case GeometryKind::point: return "Point";
    case GeometryKind::line_string: return "LineString";
    case GeometryKind::polygon: return "Polygon";
    case GeometryKind::multi_point: return "MultiPoint";
    case GeometryKind::multi_line_string: return "MultiLineString";
    case GeometryKind::multi_polygon: return "MultiPolygon";
  }
  return "?";
}

// Closed ring: first vertex equals last, at least 4 entries.
using Ring = std::vector<Point2>;

struct PolygonData {
  Ring exterior;
  std::vector<Ring> holes;

  friend bool operator==(const PolygonData&, const PolygonData&) = default;
};

namespace detail {

inline bool on_segment_collinear(Point2 p, Point2 a, Point2 b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Closed-segment intersection test (shared endpoints and collinear overlap
// count). Exact sign arithmetic; adequate away from ill-conditioned inputs.
inline bool segments_intersect(Point2 p1, Point2 p2, Point2 p3, Point2 p4) {
  double d1 = cross(p3, p4, p1);
  double d2 = cross(p3, p4, p2);
  double d3 = cross(p1, p2, p3);
  double d4 = cross(p1, p2, p4);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && on_segment_collinear(p1, p3, p4)) return true;
  if (d2 == 0 && on_segment_collinear(p2, p3, p4)) return true;
  if (d3 == 0 && on_segment_collinear(p3, p1, p2)) return true;
  if (d4 == 0 && on_segment_collinear(p4, p1, p2)) return true;
  return false;
}

inline void require_finite(Point2 p, const std::string& what) {
  if (!(std::isfinite(p.x) && std::isfinite(p.y)))
    throw_error(ErrorCode::validation, what + ": coordinates must be finite");
}

inline void validate_line_string(const std::vector<Point2>& v,
                                 const std::string& what) {
  if (v.size() < 2)
    throw_error(ErrorCode::validation, what + ": LineString needs >= 2 vertices");
  for (Point2 p : v) require_finite(p, what);
}

// Rings must be closed, have >= 4 entries including the closing duplicate,
// contain no repeated consecutive vertices, and not self-intersect.
inline void validate_ring(const Ring& r, const std::string& what) {
  if (r.size() < 4)
    throw_error(ErrorCode::validation,
                what + ": ring needs >= 4 vertices including closure");
  for (Point2 p : r) require_finite(p, what);
  if (!(r.front() == r.back()))
    throw_error(ErrorCode::validation, what + ": ring is not closed");
  std::size_t n = r.size() - 1;  // distinct edges
  for (std::size_t i = 0; i < n; ++i) {
    if (r[i] == r[i + 1])
      throw_error(ErrorCode::validation, what + ": ring has a zero-length edge");
  }
  // Pairwise edge checks. Adjacent edges may only meet at the shared vertex.
  for (std::size_t i = 0; i < n; ++i) {
    Point2 a = r[i], b = r[i + 1];
    for (std::size_t j = i + 1; j < n; ++j) {
      Point2 c = r[j], d = r[j + 1];
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) {
        // Fold-back: consecutive collinear edges overlapping beyond the
        // shared vertex.
        Point2 shared = (j == i + 1) ? b : a;
        Point2 e1 = (j == i + 1) ? a : b;
        Point2 e2 = (j == i + 1) ? d : c;
        if (cross(shared, e1, e2) == 0 && dot(e1 - shared, e2 - shared) > 0)
          throw_error(ErrorCode::validation, what + ": ring folds back on itself");
        continue;
      }
      if (segments_intersect(a, b, c, d))
        throw_error(ErrorCode::validation, what + ": ring self-intersects");
    }
  }
}

inline bool point_in_ring_parity(Point2 p, const Ring& r) {
  bool inside = false;
  for (std::size_t i = 0, n = r.size() - 1; i < n; ++i) {
    Point2 a = r[i], b = r[i + 1];
    if ((a.y > p.y) != (b.y > p.y)) {
      double x_int = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x_int) inside = !inside;
    }
  }
  return inside;
}

inline void validate_polygon(const PolygonData& pd, const std::string& what) {
  validate_ring(pd.exterior, what + " exterior");
  for (std::size_t h = 0; h < pd.holes.size(); ++h) {
    const std::string hw = what + " hole " + std::to_string(h);
    validate_ring(pd.holes[h], hw);
    // Hole containment: every vertex inside or on the exterior ring, and no
    // edge crossing against the exterior or other holes.
    for (Point2 p : pd.holes[h]) {
      bool on_ext = false;
      for (std::size_t i = 0; i + 1 < pd.exterior.size() && !on_ext; ++i) {
        if (cross(pd.exterior[i], pd.exterior[i + 1], p) == 0 &&
            on_segment_collinear(p, pd.exterior[i], pd.exterior[i + 1]))
          on_ext = true;
      }
      if (!on_ext && !point_in_ring_parity(p, pd.exterior))
        throw_error(ErrorCode::validation, hw + ": lies outside the exterior ring");
    }
    auto rings_cross = [](const Ring& r1, const Ring& r2) {
      for (std::size_t i = 0; i + 1 < r1.size(); ++i) {
        for (std::size_t j = 0; j + 1 < r2.size(); ++j) {
          double d1 = cross(r2[j], r2[j + 1], r1[i]);
          double d2 = cross(r2[j], r2[j + 1], r1[i + 1]);
          double d3 = cross(r1[i], r1[i + 1], r2[j]);
          double d4 = cross(r1[i], r1[i + 1], r2[j + 1]);
          if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
              ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
            return true;  // proper crossing only; touching is tolerated
        }
      }
      return false;
    };
    if (rings_cross(pd.holes[h], pd.exterior))
      throw_error(ErrorCode::validation, hw + ": crosses the exterior ring");
    for (std::size_t g = 0; g < h; ++g) {
      if (rings_cross(pd.holes[h], pd.holes[g]))
        throw_error(ErrorCode::validation, hw + ": crosses another hole");
    }
  }
}

}  // namespace detail

// Immutable Simple-Features geometry. Construction goes through the
// validating factories; all operations on a constructed Geometry may trust
// the invariants.
class Geometry {
 public:
  static Geometry point(Point2 p) {
    detail::require_finite(p, "Point");
    Geometry g(GeometryKind::point);
    g.pts_ = {p};
    return g;
  }

  static Geometry line_string(std::vector<Point2> v) {
    detail::validate_line_string(v, "LineString");
    Geometry g(GeometryKind::line_string);
    g.pts_ = std::move(v);
    return g;
  }

  static Geometry polygon(Ring exterior, std::vector<Ring> holes = {}) {
    PolygonData pd{std::move(exterior), std::move(holes)};
    detail::validate_polygon(pd, "Polygon");
    Geometry g(GeometryKind::polygon);
    g.polys_ = {std::move(pd)};
    return g;
  }

  // First ring is the exterior, the rest are holes.
  static PolygonData rings_to_polygon_data(std::vector<Ring> rings) {
    if (rings.empty())
      throw_error(ErrorCode::validation, "Polygon needs >= 1 ring");
    PolygonData pd;
    pd.exterior = std::move(rings.front());
    pd.holes.assign(std::make_move_iterator(rings.begin() + 1),
                    std::make_move_iterator(rings.end()));
    return pd;
  }

  static Geometry polygon_from_rings(std::vector<Ring> rings) {
    PolygonData pd = rings_to_polygon_data(std::move(rings));
    return polygon(std::move(pd.exterior), std::move(pd.holes));
  }

  static Geometry multi_point(std::vector<Point2> v) {
    if (v.empty())
      throw_error(ErrorCode::validation, "MultiPoint needs >= 1 part");
    for (Point2 p : v) detail::require_finite(p, "MultiPoint");
    Geometry g(GeometryKind::multi_point);
    g.pts_ = std::move(v);
    return g;
  }

  static Geometry multi_line_string(std::vector<std::vector<Point2>> parts) {
    if (parts.empty())
      throw_error(ErrorCode::validation, "MultiLineString needs >= 1 part");
    for (std::size_t i = 0; i < parts.size(); ++i)
      detail::validate_line_string(parts[i],
                                   "MultiLineString part " + std::to_string(i));
    Geometry g(GeometryKind::multi_line_string);
    g.lines_ = std::move(parts);
    return g;
  }

  static Geometry multi_polygon(std::vector<PolygonData> parts) {
    if (parts.empty())
      throw_error(ErrorCode::validation, "MultiPolygon needs >= 1 part");
    for (std::size_t i = 0; i < parts.size(); ++i)
      detail::validate_polygon(parts[i],
                               "MultiPolygon part " + std::to_string(i));
    Geometry g(GeometryKind::multi_polygon);
    g.polys_ = std::move(parts);
    return g;
  }

  GeometryKind kind() const { return kind_; }

  bool is_multi() const {
    return kind_ == GeometryKind::multi_point ||
           kind_ == GeometryKind::multi_line_string ||
           kind_ == GeometryKind::multi_polygon;
  }

  Point2 as_point() const {
    require_kind(GeometryKind::point);
    return pts_[0];
  }
  const std::vector<Point2>& line_vertices() const {
    require_kind(GeometryKind::line_string);
    return pts_;
  }
  const PolygonData& polygon_data() const {
    require_kind(GeometryKind::polygon);
    return polys_[0];
  }
  const std::vector<Point2>& multi_points() const {
    require_kind(GeometryKind::multi_point);
    return pts_;
  }
  const std::vector<std::vector<Point2>>& line_parts() const {
    require_kind(GeometryKind::multi_line_string);
    return lines_;
  }
  const std::vector<PolygonData>& polygon_parts() const {
    if (kind_ != GeometryKind::polygon && kind_ != GeometryKind::multi_polygon)
      throw_error(ErrorCode::argument,
                  std::string("expected Polygon or MultiPolygon, got ") +
                      to_string(kind_));
    return polys_;
  }

  template <typename F>
  void for_each_vertex(F&& f) const {
    for (const Point2& p : pts_) f(p);
    for (const auto& part : lines_)
      for (const Point2& p : part) f(p);
    for (const auto& pd : polys_) {
      for (const Point2& p : pd.exterior) f(p);
      for (const auto& h : pd.holes)
        for (const Point2& p : h) f(p);
    }
  }

  // Visits every linear segment (polyline edges and ring edges).
  template <typename F>
  void for_each_segment(F&& f) const {
    if (kind_ == GeometryKind::line_string) {
      for (std::size_t i = 0; i + 1 < pts_.size(); ++i) f(pts_[i], pts_[i + 1]);
    }
    for (const auto& part : lines_)
      for (std::size_t i = 0; i + 1 < part.size(); ++i) f(part[i], part[i + 1]);
    for (const auto& pd : polys_) {
      for (std::size_t i = 0; i + 1 < pd.exterior.size(); ++i)
        f(pd.exterior[i], pd.exterior[i + 1]);
      for (const auto& h : pd.holes)
        for (std::size_t i = 0; i + 1 < h.size(); ++i) f(h[i], h[i + 1]);
    }
  }

  std::size_t vertex_count() const {
    std::size_t n = 0;
    for_each_vertex([&](const Point2&) { ++n; });
    return n;
  }

  Frame bounds() const {
    double min_x = std::numeric_limits<double>::infinity();
    double min_y = min_x;
    double max_x = -min_x;
    double max_y = -min_x;
    for_each_vertex([&](const Point2& p) {
      min_x = std::min(min_x, p.x);
      min_y = std::min(min_y, p.y);
      max_x = std::max(max_x, p.x);
      max_y = std::max(max_y, p.y);
    });
    return Frame{min_x, min_y, max_x, max_y};  // may be degenerate for a Point
  }

  // Mean of stored vertices, counting each ring's closing duplicate once.
  Point2 vertex_centroid() const {
    double sx = 0, sy = 0;
    std::size_t n = 0;
    auto add = [&](const Point2& p) {
      sx += p.x;
      sy += p.y;
      ++n;
    };
    for (const Point2& p : pts_) add(p);
    for (const auto& part : lines_)
      for (const Point2& p : part) add(p);
    for (const auto& pd : polys_) {
      for (std::size_t i = 0; i + 1 < pd.exterior.size(); ++i) add(pd.exterior[i]);
      for (const auto& h : pd.holes)
        for (std::size_t i = 0; i + 1 < h.size(); ++i) add(h[i]);
    }
    return {sx / static_cast<double>(n), sy / static_cast<double>(n)};
  }

  friend bool operator==(const Geometry&, const Geometry&) = default;

 private:
  explicit Geometry(GeometryKind k) : kind_(k) {}

  void require_kind(GeometryKind k) const {
    if (kind_ != k)
      throw_error(ErrorCode::argument, std::string("expected ") + to_string(k) +
                                           ", got " + to_string(kind_));
  }

  GeometryKind kind_;
  std::vector<Point2> pts_;                 // point / multi_point / line_string
  std::vector<std::vector<Point2>> lines_;  // multi_line_string
  std::vector<PolygonData> polys_;          // polygon / multi_polygon
};

}  // namespace geomenc
