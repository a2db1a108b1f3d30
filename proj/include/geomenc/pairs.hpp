#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "geomenc/corpus.hpp"
#include "geomenc/errors.hpp"
#include "geomenc/geometry_ops.hpp"
#include "geomenc/rng.hpp"

namespace geomenc {

struct PairSample {
  RelationKind kind;
  Geometry a;
  Geometry b;
  bool label = false;
};

struct PairGenConfig {
  Frame frame = Frame{0, 0, 100, 100};
  ShapeGenParams gen{};
  int max_attempts = 400;         // candidate draws per emitted sample
  double near_miss_fraction = 0.5;  // share of false cases built as near misses
};

namespace detail {

inline bool bbox_in_frame(const Geometry& g, const Frame& f) {
  return f.contains(g.bounds());
}

// Uniform point strictly inside the polygon, by bounding-box rejection.
inline Point2 random_interior_point(const Geometry& poly, Rng& rng) {
  Frame bb = poly.bounds();
  const PolygonData& pd = poly.polygon_data();
  for (int i = 0; i < 4096; ++i) {
    Point2 p{rng.uniform(bb.min_x, bb.max_x), rng.uniform(bb.min_y, bb.max_y)};
    if (point_in_polygon_interior(p, pd)) return p;
  }
  throw_error(ErrorCode::generator, "failed to sample a polygon interior point");
}

inline Point2 point_on_boundary(const Geometry& poly, Rng& rng) {
  const Ring& r = poly.polygon_data().exterior;
  std::size_t e = static_cast<std::size_t>(rng.below(r.size() - 1));
  double t = rng.uniform(0.1, 0.9);
  return {r[e].x + t * (r[e + 1].x - r[e].x), r[e].y + t * (r[e + 1].y - r[e].y)};
}

inline Point2 point_along_line(const Geometry& line, Rng& rng) {
  const auto& v = line.line_vertices();
  std::size_t e = static_cast<std::size_t>(rng.below(v.size() - 1));
  double t = rng.uniform(0.1, 0.9);
  return {v[e].x + t * (v[e + 1].x - v[e].x), v[e].y + t * (v[e + 1].y - v[e].y)};
}

// Normalize into a sub-frame sized box, then translate uniformly anywhere in
// the full frame.
inline Geometry normalize_then_place(const Geometry& raw, const Frame& size_box,
                                     const Frame& full, Rng& rng,
                                     const NormalizeParams& np) {
  Geometry g = geomenc::normalize_to_frame(raw, size_box, rng, np);
  Frame bb = g.bounds();
  double dx = rng.uniform(full.min_x - bb.min_x, full.max_x - bb.max_x);
  double dy = rng.uniform(full.min_y - bb.min_y, full.max_y - bb.max_y);
  return translate(g, dx, dy);
}

// Pair members stay comfortably smaller than the frame so translations have
// room to realize both labels.
inline Geometry place_shape(GeometryKind kind, const PairGenConfig& cfg, Rng& rng,
                            double max_rel = 0.5) {
  NormalizeParams np = cfg.gen.normalize;
  np.min_rel = std::min(np.min_rel, max_rel);
  Frame sub = Frame{cfg.frame.min_x, cfg.frame.min_y,
                    cfg.frame.min_x + cfg.frame.width() * max_rel,
                    cfg.frame.min_y + cfg.frame.height() * max_rel};
  Geometry raw = (kind == GeometryKind::line_string)
                     ? random_walk_line(rng, cfg.gen)
                     : random_polygon_shape(rng, cfg.gen);
  return normalize_then_place(raw, sub, cfg.frame, rng, np);
}

// Translate g so that src (a point of g) lands on dst.
inline Geometry move_point_to(const Geometry& g, Point2 src, Point2 dst) {
  return translate(g, dst.x - src.x, dst.y - src.y);
}

inline Geometry convex_from(Rng& rng) {
  std::vector<Point2> outline = random_convex_outline(rng, 9);
  return Geometry::polygon(close_ring(std::move(outline)));
}

// Builds a polygon sharing the edge (p, q) of a convex polygon, lying on the
// opposite side: the convex hull of p, q, and points strictly across the
// edge line keeps (p, q) as one of its edges with the exact coordinates.
inline Geometry snapped_neighbor(const Geometry& base, Rng& rng) {
  const Ring& r = base.polygon_data().exterior;
  std::size_t e = static_cast<std::size_t>(rng.below(r.size() - 1));
  Point2 p = r[e], q = r[e + 1];
  Point2 d = q - p;
  double len = std::sqrt(dot(d, d));
  Point2 inward{-d.y / len, d.x / len};  // CCW ring: interior on the left
  Point2 outward{-inward.x, -inward.y};
  std::vector<Point2> cloud{p, q};
  int extra = rng.uniform_int(3, 7);
  for (int i = 0; i < extra; ++i) {
    double along = rng.uniform(-0.2, 1.2);
    double away = rng.uniform(0.25, 1.1) * len;
    cloud.push_back(p + d * along + outward * away);
  }
  std::vector<Point2> hull = convex_hull(cloud);
  return Geometry::polygon(close_ring(std::move(hull)));
}

}  // namespace detail

// Rejection-samples shape placements until the requested label holds, with
// every emitted label re-verified through relation(). False cases mix far
// placements with near misses so the negative class is not trivially
// separable.
inline std::vector<PairSample> generate_pairs(RelationKind kind, int n_true,
                                              int n_false, const PairGenConfig& cfg,
                                              Rng& rng) {
  std::vector<PairSample> out;
  out.reserve(n_true + n_false);

  auto emit = [&](bool want) {
    for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
      bool near_miss = !want && rng.coin(cfg.near_miss_fraction);
      Geometry a = Geometry::point({0, 0});
      Geometry b = a;
      switch (kind) {
        case RelationKind::point_in_polygon: {
          b = detail::place_shape(GeometryKind::polygon, cfg, rng);
          Point2 p{};
          if (want) {
            p = detail::random_interior_point(b, rng);
          } else if (near_miss) {
            Point2 on = detail::point_on_boundary(b, rng);
            Point2 c = b.vertex_centroid();
            double norm = std::max(distance(on, c), 1e-9);
            double off = rng.uniform(0.2, 3.0);
            p = {on.x + (on.x - c.x) / norm * off, on.y + (on.y - c.y) / norm * off};
          } else {
            p = {rng.uniform(cfg.frame.min_x, cfg.frame.max_x),
                 rng.uniform(cfg.frame.min_y, cfg.frame.max_y)};
          }
          if (!cfg.frame.contains(p)) continue;
          a = Geometry::point(p);
          break;
        }
        case RelationKind::point_on_line_string: {
          b = detail::place_shape(GeometryKind::line_string, cfg, rng);
          Point2 p{};
          if (want) {
            p = detail::point_along_line(b, rng);
          } else if (near_miss) {
            Point2 on = detail::point_along_line(b, rng);
            double ang = rng.uniform(0, 2 * std::numbers::pi);
            double off = rng.uniform(0.05, 2.0);
            p = {on.x + off * std::cos(ang), on.y + off * std::sin(ang)};
          } else {
            p = {rng.uniform(cfg.frame.min_x, cfg.frame.max_x),
                 rng.uniform(cfg.frame.min_y, cfg.frame.max_y)};
          }
          if (!cfg.frame.contains(p)) continue;
          a = Geometry::point(p);
          break;
        }
        case RelationKind::line_line_intersect: {
          a = detail::place_shape(GeometryKind::line_string, cfg, rng);
          Geometry braw = detail::place_shape(GeometryKind::line_string, cfg, rng);
          if (want) {
            Point2 pa = detail::point_along_line(a, rng);
            Point2 pb = detail::point_along_line(braw, rng);
            b = detail::move_point_to(braw, pb, pa);
          } else if (near_miss) {
            Point2 pa = detail::point_along_line(a, rng);
            Point2 pb = detail::point_along_line(braw, rng);
            double ang = rng.uniform(0, 2 * std::numbers::pi);
            double off = rng.uniform(1.0, 8.0);
            b = detail::move_point_to(braw, pb,
                                      {pa.x + off * std::cos(ang),
                                       pa.y + off * std::sin(ang)});
          } else {
            b = braw;
          }
          break;
        }
        case RelationKind::line_intersects_polygon: {
          a = detail::place_shape(GeometryKind::line_string, cfg, rng);
          Geometry braw = detail::place_shape(GeometryKind::polygon, cfg, rng);
          if (want) {
            Point2 pa = detail::point_along_line(a, rng);
            Point2 pb = detail::random_interior_point(braw, rng);
            b = detail::move_point_to(braw, pb, pa);
          } else if (near_miss) {
            Point2 pa = detail::point_along_line(a, rng);
            Point2 pb = detail::point_on_boundary(braw, rng);
            Point2 c = braw.vertex_centroid();
            double norm = std::max(distance(pb, c), 1e-9);
            double off = rng.uniform(0.3, 4.0);
            Point2 dst{pa.x + (pb.x - c.x) / norm * off,
                       pa.y + (pb.y - c.y) / norm * off};
            b = detail::move_point_to(braw, pb, dst);
          } else {
            b = braw;
          }
          break;
        }
        case RelationKind::polygon_intersects_polygon: {
          a = detail::place_shape(GeometryKind::polygon, cfg, rng);
          Geometry braw = detail::place_shape(GeometryKind::polygon, cfg, rng);
          if (want) {
            Point2 pa = detail::random_interior_point(a, rng);
            Point2 pb = detail::random_interior_point(braw, rng);
            b = detail::move_point_to(braw, pb, pa);
          } else if (near_miss) {
            // Slide b just past a's bounding box with a small gap.
            Frame fa = a.bounds();
            Frame fb = braw.bounds();
            double gap = rng.uniform(0.3, 4.0);
            bool horizontal = rng.coin(0.5);
            double dx = horizontal ? (fa.max_x + gap - fb.min_x) : 0;
            double dy = horizontal ? fa.min_y - fb.min_y + rng.uniform(-5, 5)
                                   : (fa.max_y + gap - fb.min_y);
            if (!horizontal) dx = fa.min_x - fb.min_x + rng.uniform(-5, 5);
            b = translate(braw, dx, dy);
          } else {
            b = braw;
          }
          break;
        }
        case RelationKind::polygon_borders_polygon: {
          Geometry base = detail::convex_from(rng);
          Geometry raw_b = detail::snapped_neighbor(base, rng);
          // Scale/place the snapped pair together so the shared edge stays
          // bit-exact: normalize would break the shared coordinates, so we
          // only translate into the frame.
          Frame joint{std::min(base.bounds().min_x, raw_b.bounds().min_x),
                      std::min(base.bounds().min_y, raw_b.bounds().min_y),
                      std::max(base.bounds().max_x, raw_b.bounds().max_x),
                      std::max(base.bounds().max_y, raw_b.bounds().max_y)};
          double fit = 0.45 * std::min(cfg.frame.width() / joint.width(),
                                       cfg.frame.height() / joint.height());
          double scale = rng.log_uniform(fit * 0.3, fit);
          auto rescale = [&](const Geometry& g) {
            return map_vertices(g, [&](Point2 p) {
              return Point2{(p.x - joint.min_x) * scale,
                            (p.y - joint.min_y) * scale};
            });
          };
          a = rescale(base);
          b = rescale(raw_b);
          if (!want) {
            Point2 n = b.vertex_centroid() - a.vertex_centroid();
            double norm = std::max(std::sqrt(dot(n, n)), 1e-9);
            double off = rng.uniform(0.05, 1.5) * (rng.coin(0.5) ? 1.0 : -1.0);
            if (!near_miss) off = rng.uniform(3.0, 20.0);
            b = translate(b, n.x / norm * off, n.y / norm * off);
          }
          double dx = rng.uniform(cfg.frame.min_x - std::min(a.bounds().min_x, b.bounds().min_x),
                                  cfg.frame.max_x - std::max(a.bounds().max_x, b.bounds().max_x));
          double dy = rng.uniform(cfg.frame.min_y - std::min(a.bounds().min_y, b.bounds().min_y),
                                  cfg.frame.max_y - std::max(a.bounds().max_y, b.bounds().max_y));
          a = translate(a, dx, dy);
          b = translate(b, dx, dy);
          break;
        }
      }
      if (!detail::bbox_in_frame(a, cfg.frame) || !detail::bbox_in_frame(b, cfg.frame))
        continue;
      if (relation(kind, a, b) != want) continue;
      out.push_back(PairSample{kind, std::move(a), std::move(b), want});
      return;
    }
    throw_error(ErrorCode::generator,
                std::string("pair generation budget exhausted for ") +
                    to_string(kind));
  };

  for (int i = 0; i < n_true; ++i) emit(true);
  for (int i = 0; i < n_false; ++i) emit(false);
  return out;
}

}  // namespace geomenc
