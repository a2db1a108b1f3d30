#pragma once

// Independent reference computations used by the tests. Everything here is
// deliberately brute force and shares no code path with the library
// implementations it checks.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <numeric>
#include <set>
#include <vector>

#include "geomenc/geometry.hpp"
#include "geomenc/geometry_ops.hpp"
#include "geomenc/grid.hpp"
#include "geomenc/rng.hpp"

namespace oracles {

using geomenc::Frame;
using geomenc::Geometry;
using geomenc::GeometryKind;
using geomenc::Point2;
using geomenc::PolygonData;
using geomenc::Ring;
using geomenc::Rng;

// Winding-number point-in-ring test (angle summation); independent of the
// crossing-parity test used by the library.
inline bool winding_inside(Point2 p, const Ring& r) {
  double total = 0;
  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    double ax = r[i].x - p.x, ay = r[i].y - p.y;
    double bx = r[i + 1].x - p.x, by = r[i + 1].y - p.y;
    total += std::atan2(ax * by - ay * bx, ax * bx + ay * by);
  }
  return std::abs(total) > std::numbers::pi;  // ~2*pi inside, ~0 outside
}

inline bool winding_inside_polygon(Point2 p, const PolygonData& pd) {
  if (!winding_inside(p, pd.exterior)) return false;
  for (const Ring& h : pd.holes)
    if (winding_inside(p, h)) return false;
  return true;
}

inline std::vector<std::pair<Point2, Point2>> segments_of(const Geometry& g) {
  std::vector<std::pair<Point2, Point2>> segs;
  g.for_each_segment([&](Point2 a, Point2 b) { segs.emplace_back(a, b); });
  return segs;
}

// Dense-sampling minimum distance: samples points along every segment and
// takes the minimum point distance; polygon interiors are resolved with the
// winding test.
inline double sampled_min_distance(const Geometry& g, Point2 p,
                                   std::size_t min_samples = 100000) {
  if (g.kind() == GeometryKind::point)
    return geomenc::distance(g.as_point(), p);
  if (g.kind() == GeometryKind::multi_point) {
    double best = std::numeric_limits<double>::infinity();
    for (Point2 q : g.multi_points())
      best = std::min(best, geomenc::distance(q, p));
    return best;
  }
  if (g.kind() == GeometryKind::polygon || g.kind() == GeometryKind::multi_polygon) {
    for (const PolygonData& pd : g.polygon_parts())
      if (winding_inside_polygon(p, pd)) return 0.0;
  }
  auto segs = segments_of(g);
  double perimeter = 0;
  for (auto& [a, b] : segs) perimeter += geomenc::distance(a, b);
  double step = perimeter / static_cast<double>(min_samples);
  step = std::min(step, 4e-4);
  double best = std::numeric_limits<double>::infinity();
  for (auto& [a, b] : segs) {
    double len = geomenc::distance(a, b);
    auto n = static_cast<std::size_t>(std::ceil(len / step)) + 1;
    for (std::size_t i = 0; i <= n; ++i) {
      double t = static_cast<double>(i) / static_cast<double>(n);
      Point2 q{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
      best = std::min(best, geomenc::distance(q, p));
    }
  }
  return best;
}

// Monte-Carlo polygon area over the bounding box.
inline double mc_area(const Geometry& g, std::size_t n_samples, Rng& rng) {
  const PolygonData& pd = g.polygon_data();
  Frame bb = g.bounds();
  std::size_t hits = 0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    Point2 p{rng.uniform(bb.min_x, bb.max_x), rng.uniform(bb.min_y, bb.max_y)};
    if (winding_inside_polygon(p, pd)) ++hits;
  }
  return bb.width() * bb.height() * static_cast<double>(hits) /
         static_cast<double>(n_samples);
}

// Exhaustive farthest vertex pair; returns the squared distance only, so the
// check is independent of the library's tie-breaking.
inline double max_pair_sq_distance(const Geometry& g) {
  std::vector<Point2> v;
  g.for_each_vertex([&](const Point2& p) { v.push_back(p); });
  double best = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      best = std::max(best, geomenc::sq_distance(v[i], v[j]));
  return best;
}

// Orientation of the exhaustive farthest pair folded into [0, pi). For tied
// diameters the result is the set of candidate angles.
inline std::vector<double> farthest_pair_angles(const Geometry& g) {
  std::vector<Point2> v;
  g.for_each_vertex([&](const Point2& p) { v.push_back(p); });
  double best = max_pair_sq_distance(g);
  std::vector<double> angles;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (geomenc::sq_distance(v[i], v[j]) == best) {
        double a = std::atan2(v[j].y - v[i].y, v[j].x - v[i].x);
        const double pi = std::numbers::pi;
        a = std::fmod(a, pi);
        if (a < 0) a += pi;
        if (a >= pi) a -= pi;
        angles.push_back(a);
      }
    }
  }
  return angles;
}

// Parametric segment intersection: solves for the crossing parameters and
// falls back to interval overlap for the collinear case. Independent of the
// orientation-sign tests in the library.
inline bool segments_intersect_parametric(Point2 a, Point2 b, Point2 c, Point2 d) {
  double rx = b.x - a.x, ry = b.y - a.y;
  double sx = d.x - c.x, sy = d.y - c.y;
  double denom = rx * sy - ry * sx;
  double qpx = c.x - a.x, qpy = c.y - a.y;
  if (denom != 0) {
    double t = (qpx * sy - qpy * sx) / denom;
    double u = (qpx * ry - qpy * rx) / denom;
    return t >= 0 && t <= 1 && u >= 0 && u <= 1;
  }
  if (qpx * ry - qpy * rx != 0) return false;  // parallel, not collinear
  // Collinear: project onto the dominant axis and test interval overlap.
  auto proj = [&](Point2 p) {
    return std::abs(rx) >= std::abs(ry) ? p.x : p.y;
  };
  double a0 = proj(a), a1 = proj(b), c0 = proj(c), c1 = proj(d);
  if (a0 > a1) std::swap(a0, a1);
  if (c0 > c1) std::swap(c0, c1);
  return std::max(a0, c0) <= std::min(a1, c1);
}

// Exhaustive pairwise ROC AUC: wins + half ties over all (pos, neg) pairs.
inline double pairwise_auc(const std::vector<int>& labels,
                           const std::vector<double>& scores) {
  double wins = 0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == 0) continue;
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (labels[j] != 0) continue;
      ++pairs;
      if (scores[i] > scores[j]) wins += 1;
      else if (scores[i] == scores[j]) wins += 0.5;
    }
  }
  return wins / static_cast<double>(pairs);
}

// Brute-force DBSCAN semantics: core flags from the full distance matrix,
// core components via transitive closure, border points attached to their
// nearest core (ties to the lowest core index). Components are numbered by
// their minimal core index.
inline std::vector<int> brute_force_dbscan(const std::vector<std::vector<double>>& rows,
                                           double eps, int min_pts) {
  const std::size_t n = rows.size();
  std::vector<int> labels(n, -1);
  if (n == 0) return labels;
  auto dist = [&](std::size_t i, std::size_t j) {
    double s = 0;
    for (std::size_t k = 0; k < rows[i].size(); ++k) {
      double d = rows[i][k] - rows[j][k];
      s += d * d;
    }
    return std::sqrt(s);
  };
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) adj[i][j] = dist(i, j) <= eps;
  std::vector<bool> core(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    int cnt = 0;
    for (std::size_t j = 0; j < n; ++j) cnt += adj[i][j];
    core[i] = cnt >= min_pts;
  }
  // Transitive closure restricted to core points (Warshall).
  std::vector<std::vector<bool>> reach = adj;
  for (std::size_t k = 0; k < n; ++k) {
    if (!core[k]) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (!core[i] || !reach[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (core[j] && reach[k][j]) reach[i][j] = true;
    }
  }
  int next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!core[i] || labels[i] != -1) continue;
    labels[i] = next;
    for (std::size_t j = i + 1; j < n; ++j)
      if (core[j] && reach[i][j]) labels[j] = next;
    ++next;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (core[i]) continue;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      if (!core[j] || !adj[i][j]) continue;
      double d = dist(i, j);
      if (d < best) {
        best = d;
        labels[i] = labels[j];
      }
    }
  }
  return labels;
}

// Tiles hit by dense sampling along a polyline; a subset of the exact
// answer that converges once the step is well below the tile spacing.
inline std::set<std::size_t> sampled_tiles(const Geometry& g,
                                           const geomenc::TileGrid& grid,
                                           double step) {
  std::set<std::size_t> hit;
  auto tile_of = [&](Point2 p) -> std::optional<std::size_t> {
    if (p.x < grid.frame.min_x || p.x > grid.frame.max_x ||
        p.y < grid.frame.min_y || p.y > grid.frame.max_y)
      return std::nullopt;
    auto ix = static_cast<int>((p.x - grid.frame.min_x) / grid.spacing);
    auto iy = static_cast<int>((p.y - grid.frame.min_y) / grid.spacing);
    ix = std::clamp(ix, 0, grid.nx - 1);
    iy = std::clamp(iy, 0, grid.ny - 1);
    return static_cast<std::size_t>(iy) * grid.nx + ix;
  };
  g.for_each_segment([&](Point2 a, Point2 b) {
    double len = geomenc::distance(a, b);
    auto n = static_cast<std::size_t>(std::ceil(len / step)) + 1;
    for (std::size_t i = 0; i <= n; ++i) {
      double t = static_cast<double>(i) / static_cast<double>(n);
      if (auto idx = tile_of({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}))
        hit.insert(*idx);
    }
  });
  return hit;
}

}  // namespace oracles
