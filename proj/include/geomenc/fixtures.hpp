#pragma once

// Deterministic demonstration inputs shared by the CLI and the test suites.

#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "geomenc/geometry.hpp"

namespace geomenc::fixtures {

// --- Continuity demo -------------------------------------------------------
// A 50-step point trajectory across a 3x3 grid. The path visits five tiles,
// so the DIV encoding takes exactly five distinct values while every MPP
// encoding differs. No sample lands on a tile boundary.

inline Frame continuity_frame() { return Frame::make(0, 0, 90, 90); }
inline double continuity_resolution() { return 30.0; }
inline constexpr int kContinuitySteps = 50;

inline std::vector<Point2> continuity_trajectory() {
  const std::vector<Point2> waypoints{
      {15, 15}, {45, 15}, {45, 45}, {75, 45}, {75, 75}};
  double total = 0;
  std::vector<double> cuts{0};
  for (std::size_t i = 0; i + 1 < waypoints.size(); ++i) {
    total += distance(waypoints[i], waypoints[i + 1]);
    cuts.push_back(total);
  }
  std::vector<Point2> pts;
  pts.reserve(kContinuitySteps);
  for (int k = 0; k < kContinuitySteps; ++k) {
    double s = total * static_cast<double>(k) / (kContinuitySteps - 1);
    std::size_t leg = 0;
    while (leg + 2 < cuts.size() && s > cuts[leg + 1]) ++leg;
    double seg_len = cuts[leg + 1] - cuts[leg];
    double t = seg_len > 0 ? (s - cuts[leg]) / seg_len : 0;
    Point2 a = waypoints[leg], b = waypoints[leg + 1];
    pts.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
  }
  return pts;
}

// --- Clustering demo --------------------------------------------------------
// Overlapping shapes of three categories in a 100x100 frame, encoded on a
// 5x5 grid: three hexagons, four points, and three groups of line strings
// split by orientation and length. Tuned so that DBSCAN at eps 0.6 finds the
// five shape groups; growing eps merges the long and short horizontal lines
// first and the points into the horizontal lines after that.

inline Frame clustering_demo_frame() { return Frame::make(0, 0, 100, 100); }
inline double clustering_demo_resolution() { return 20.0; }

struct DemoShape {
  std::string group;
  Geometry geometry;
};

inline std::vector<DemoShape> clustering_demo_shapes() {
  std::vector<DemoShape> shapes;
  auto hexagon = [](Point2 c, double r) {
    Ring ring;
    for (int i = 0; i < 6; ++i) {
      double a = std::numbers::pi / 3 * i;
      ring.push_back({c.x + r * std::cos(a), c.y + r * std::sin(a)});
    }
    ring.push_back(ring.front());
    return Geometry::polygon(ring);
  };
  shapes.push_back({"hexagon", hexagon({28, 72}, 10)});
  shapes.push_back({"hexagon", hexagon({28, 72}, 12)});
  shapes.push_back({"hexagon", hexagon({28, 72}, 14)});

  auto point = [](double x, double y) { return Geometry::point({x, y}); };
  shapes.push_back({"point", point(70, 58)});
  shapes.push_back({"point", point(74, 55)});
  shapes.push_back({"point", point(78, 58)});
  shapes.push_back({"point", point(74, 61)});

  auto hline = [](double x0, double x1, double y) {
    return Geometry::line_string({{x0, y}, {x1, y}});
  };
  auto vline = [](double x, double y0, double y1) {
    return Geometry::line_string({{x, y0}, {x, y1}});
  };
  shapes.push_back({"long-horizontal", hline(10, 90, 48)});
  shapes.push_back({"long-horizontal", hline(10, 90, 50)});
  shapes.push_back({"long-horizontal", hline(10, 90, 52)});

  shapes.push_back({"short-horizontal", hline(25, 75, 48)});
  shapes.push_back({"short-horizontal", hline(25, 75, 50)});
  shapes.push_back({"short-horizontal", hline(25, 75, 52)});

  shapes.push_back({"vertical", vline(48, 10, 90)});
  shapes.push_back({"vertical", vline(50, 10, 90)});
  shapes.push_back({"vertical", vline(52, 10, 90)});
  return shapes;
}

// --- Encoding demo ----------------------------------------------------------
// One shape of each primitive type in a 400x300 frame with a 100-unit grid,
// giving 12-element encodings.

inline Frame encoding_demo_frame() { return Frame::make(0, 0, 400, 300); }
inline double encoding_demo_resolution() { return 100.0; }

inline std::vector<std::pair<std::string, Geometry>> encoding_demo_shapes() {
  std::vector<std::pair<std::string, Geometry>> shapes;
  shapes.emplace_back("point", Geometry::point({80, 220}));
  shapes.emplace_back("linestring",
                      Geometry::line_string({{40, 40}, {140, 90}, {230, 70}, {330, 140}}));
  shapes.emplace_back(
      "polygon",
      Geometry::polygon({{240, 160}, {360, 170}, {350, 260}, {260, 250}, {240, 160}}));
  return shapes;
}

}  // namespace geomenc::fixtures
