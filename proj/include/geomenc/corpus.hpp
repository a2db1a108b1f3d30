#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geomenc/errors.hpp"
#include "geomenc/geojson.hpp"
#include "geomenc/geometry_ops.hpp"
#include "geomenc/num_format.hpp"
#include "geomenc/rng.hpp"

namespace geomenc {

struct ShapeGenParams {
  // Random-walk polylines; the turn deviation controls sinuosity.
  int line_min_vertices = 8;
  int line_max_vertices = 48;
  double line_turn_sigma_lo = 0.02;
  double line_turn_sigma_hi = 0.9;
  // Polygons: a mix of convex hulls, notched convex shapes, and radial
  // (star-shaped) outlines with noisy radii.
  int poly_min_vertices = 6;
  int poly_max_vertices = 22;
  double poly_irregularity_lo = 0.25;
  double poly_irregularity_hi = 0.65;
  double poly_aspect_hi = 2.5;  // anisotropic stretch, log-uniform in [1, hi]
  double convex_fraction = 0.3;
  double notch_fraction = 0.15;
  NormalizeParams normalize{0, std::numeric_limits<double>::infinity(), 0.3};
};

struct CorpusSpec {
  Frame frame = Frame{0, 0, 100, 100};
  int n_line_strings = 0;
  int n_polygons = 0;
  int n_points = 0;
  ShapeGenParams gen{};
  std::uint64_t seed = 0;
};

// A normalized geometry with its exactly computed probe targets. Key set
// depends on the kind: LineStrings carry length/sinuosity, Polygons carry
// area/char, both carry the doubled-angle orientation pair.
struct PropertySample {
  Geometry geometry;
  std::map<std::string, double> targets;
};

namespace detail {

inline Geometry random_walk_line(Rng& rng, const ShapeGenParams& p) {
  int n = rng.uniform_int(p.line_min_vertices, p.line_max_vertices);
  double sigma = rng.log_uniform(std::max(p.line_turn_sigma_lo, 1e-4),
                                 p.line_turn_sigma_hi);
  double heading = rng.uniform(0, 2 * std::numbers::pi);
  std::vector<Point2> v{{0, 0}};
  for (int i = 1; i < n; ++i) {
    heading += rng.normal(0, sigma);
    v.push_back({v.back().x + std::cos(heading), v.back().y + std::sin(heading)});
  }
  return Geometry::line_string(std::move(v));
}

inline Ring close_ring(std::vector<Point2> pts) {
  pts.push_back(pts.front());
  return pts;
}

inline std::vector<Point2> random_convex_outline(Rng& rng, int n_points) {
  std::vector<Point2> cloud;
  for (int i = 0; i < n_points + 4; ++i)
    cloud.push_back({rng.normal(0, 1), rng.normal(0, 1)});
  return convex_hull(cloud);
}

// Lobed radial outline: low-frequency radius modulation plus mild jitter.
// Coarse lobes give the convex-hull ratio a signal at encoder scale instead
// of burying it in sub-tile vertex noise.
inline std::vector<Point2> radial_outline(Rng& rng, int n, double irregularity) {
  int lobes = rng.uniform_int(2, 3);
  double phase = rng.uniform(0, 2 * std::numbers::pi);
  std::vector<Point2> pts;
  for (int i = 0; i < n; ++i) {
    double angle = (i + rng.uniform(0.08, 0.92)) * 2 * std::numbers::pi / n;
    double radius = 1.0 + irregularity * (0.85 * std::cos(lobes * angle + phase) +
                                          0.15 * rng.uniform(-1, 1));
    pts.push_back({radius * std::cos(angle), radius * std::sin(angle)});
  }
  return pts;
}

// Replaces one edge with an inward rectangular notch. Depth is drawn
// relative to the distance from the edge to the shape's center, so the bite
// stays substantial regardless of how short the chosen hull edge is.
inline std::vector<Point2> notch_outline(std::vector<Point2> outline, Rng& rng) {
  std::size_t n = outline.size();
  Point2 center{0, 0};
  for (Point2 p : outline) center = center + p;
  center = center * (1.0 / static_cast<double>(n));
  std::size_t e = static_cast<std::size_t>(rng.below(n));
  Point2 a = outline[e], b = outline[(e + 1) % n];
  Point2 d = b - a;
  double len = std::sqrt(dot(d, d));
  Point2 inward{-d.y / len, d.x / len};  // CCW outline: left normal points in
  double lo = rng.uniform(0.15, 0.35), hi = rng.uniform(0.65, 0.85);
  Point2 mid = a + d * 0.5;
  double depth = rng.uniform(0.3, 0.85) * distance(mid, center);
  Point2 a1 = a + d * lo;
  Point2 b1 = a + d * hi;
  std::vector<Point2> out;
  for (std::size_t i = 0; i <= e; ++i) out.push_back(outline[i]);
  out.push_back(a1);
  out.push_back(a1 + inward * depth);
  out.push_back(b1 + inward * depth);
  out.push_back(b1);
  for (std::size_t i = e + 1; i < n; ++i) out.push_back(outline[i]);
  return out;
}

inline Geometry random_polygon_shape(Rng& rng, const ShapeGenParams& p) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    double mode = rng.uniform();
    std::vector<Point2> outline;
    if (mode < p.convex_fraction) {
      outline = random_convex_outline(rng, rng.uniform_int(p.poly_min_vertices,
                                                           p.poly_max_vertices));
    } else if (mode < p.convex_fraction + p.notch_fraction) {
      outline = notch_outline(random_convex_outline(rng, 8), rng);
    } else {
      double irr_lo = std::max(p.poly_irregularity_lo, 0.15);
      outline = radial_outline(
          rng, rng.uniform_int(p.poly_min_vertices, p.poly_max_vertices),
          rng.uniform(irr_lo, std::max(p.poly_irregularity_hi, irr_lo)));
    }
    double aspect = rng.log_uniform(1.0, p.poly_aspect_hi);
    for (Point2& q : outline) q.x *= aspect;
    try {
      return Geometry::polygon(close_ring(std::move(outline)));
    } catch (const Error&) {
      continue;  // rare degenerate outline; redraw
    }
  }
  throw_error(ErrorCode::generator, "polygon generator failed to produce a valid shape");
}

inline std::map<std::string, double> property_targets(const Geometry& g) {
  std::map<std::string, double> t;
  double theta = orientation_angle(g);
  t["cos2theta"] = std::cos(2 * theta);
  t["sin2theta"] = std::sin(2 * theta);
  if (g.kind() == GeometryKind::line_string) {
    t["length"] = length(g);
    t["sinuosity"] = sinuosity(g);
  } else if (g.kind() == GeometryKind::polygon) {
    t["area"] = area(g);
    t["char"] = char_ratio(g);
  }
  return t;
}

}  // namespace detail

inline PropertySample make_property_sample(Geometry g) {
  auto targets = detail::property_targets(g);
  return PropertySample{std::move(g), std::move(targets)};
}

// Synthetic stand-in for a real-world extract: random polylines and
// polygons, each rotated, scaled, and placed into the frame, with targets
// computed exactly from the normalized geometry.
inline std::vector<PropertySample> generate_corpus(const CorpusSpec& spec) {
  Rng rng(spec.seed);
  std::vector<PropertySample> out;
  out.reserve(spec.n_line_strings + spec.n_polygons + spec.n_points);
  for (int i = 0; i < spec.n_line_strings; ++i) {
    Geometry raw = detail::random_walk_line(rng, spec.gen);
    out.push_back(make_property_sample(
        normalize_to_frame(raw, spec.frame, rng, spec.gen.normalize)));
  }
  for (int i = 0; i < spec.n_polygons; ++i) {
    Geometry raw = detail::random_polygon_shape(rng, spec.gen);
    out.push_back(make_property_sample(
        normalize_to_frame(raw, spec.frame, rng, spec.gen.normalize)));
  }
  for (int i = 0; i < spec.n_points; ++i) {
    Point2 p{rng.uniform(spec.frame.min_x, spec.frame.max_x),
             rng.uniform(spec.frame.min_y, spec.frame.max_y)};
    out.push_back(PropertySample{Geometry::point(p), {}});
  }
  return out;
}

// --- Corpus serialization ---------------------------------------------------

inline std::string corpus_to_geojson(const std::vector<PropertySample>& samples) {
  std::vector<FeatureItem> items;
  items.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    FeatureItem item{samples[i].geometry, {}, false, false};
    item.properties["id"] = std::to_string(i);
    for (const auto& [k, v] : samples[i].targets)
      item.properties[k] = format_double(v);
    items.push_back(std::move(item));
  }
  return write_geojson(items);
}

// Loads a property corpus from GeoJSON. Target properties are read when
// present and recomputed from the geometry otherwise, so plain exports from
// other tools work directly.
inline std::vector<PropertySample> corpus_from_geojson(std::string_view text) {
  std::vector<PropertySample> out;
  for (FeatureItem& item : parse_geojson(text)) {
    PropertySample s{std::move(item.geometry), {}};
    if (s.geometry.kind() == GeometryKind::line_string ||
        s.geometry.kind() == GeometryKind::polygon) {
      auto expected = detail::property_targets(s.geometry);
      for (const auto& [k, v] : expected) {
        auto it = item.properties.find(k);
        double parsed;
        if (it != item.properties.end() && parse_double(it->second, parsed))
          s.targets[k] = parsed;
        else
          s.targets[k] = v;
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace geomenc
