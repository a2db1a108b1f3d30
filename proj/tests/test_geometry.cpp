#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "geomenc/geometry.hpp"
#include "test_util.hpp"

using namespace geomenc;

TEST_CASE("point factory rejects non-finite coordinates") {
  CHECK_THROWS_AS(Geometry::point({std::nan(""), 0}), Error);
  CHECK_THROWS_AS(Geometry::point({0, std::numeric_limits<double>::infinity()}), Error);
  CHECK(Geometry::point({3, 4}).as_point() == Point2{3, 4});
}

TEST_CASE("line string needs at least two vertices") {
  CHECK_THROWS_AS(Geometry::line_string({{1, 2}}), Error);
  CHECK(Geometry::line_string({{0, 0}, {1, 1}}).kind() == GeometryKind::line_string);
}

TEST_CASE("polygon ring validation") {
  SECTION("unclosed ring") {
    CHECK_THROWS_WITH(Geometry::polygon({{0, 0}, {4, 0}, {4, 4}, {0, 4}}),
                      Catch::Matchers::ContainsSubstring("not closed"));
  }
  SECTION("too few vertices") {
    CHECK_THROWS_AS(Geometry::polygon({{0, 0}, {4, 0}, {0, 0}}), Error);
  }
  SECTION("self-intersecting bowtie") {
    CHECK_THROWS_WITH(
        Geometry::polygon({{0, 0}, {2, 2}, {2, 0}, {0, 2}, {0, 0}}),
        Catch::Matchers::ContainsSubstring("self-intersects"));
  }
  SECTION("zero-length edge") {
    CHECK_THROWS_AS(Geometry::polygon({{0, 0}, {0, 0}, {4, 0}, {4, 4}, {0, 0}}),
                    Error);
  }
  SECTION("valid square with hole") {
    Geometry g = Geometry::polygon(test_util::rect_ring(0, 0, 10, 10),
                                   {test_util::rect_ring(2, 2, 4, 4)});
    CHECK(g.polygon_data().holes.size() == 1);
  }
  SECTION("hole outside the exterior") {
    CHECK_THROWS_WITH(
        Geometry::polygon(test_util::rect_ring(0, 0, 10, 10),
                          {test_util::rect_ring(20, 20, 24, 24)}),
        Catch::Matchers::ContainsSubstring("outside"));
  }
  SECTION("hole crossing the exterior") {
    CHECK_THROWS_AS(Geometry::polygon(test_util::rect_ring(0, 0, 10, 10),
                                      {test_util::rect_ring(5, 5, 15, 8)}),
                    Error);
  }
}

TEST_CASE("multi-part geometries need at least one part") {
  CHECK_THROWS_AS(Geometry::multi_point({}), Error);
  CHECK_THROWS_AS(Geometry::multi_line_string({}), Error);
  CHECK_THROWS_AS(Geometry::multi_polygon({}), Error);
}

TEST_CASE("bounds and vertex accounting") {
  Geometry g = Geometry::line_string({{1, 2}, {5, -3}, {2, 7}});
  Frame b = g.bounds();
  CHECK(b.min_x == 1);
  CHECK(b.min_y == -3);
  CHECK(b.max_x == 5);
  CHECK(b.max_y == 7);
  CHECK(g.vertex_count() == 3);

  Geometry sq = Geometry::polygon(test_util::rect_ring(0, 0, 2, 2));
  Point2 c = sq.vertex_centroid();  // closing duplicate counted once
  CHECK(c.x == Catch::Approx(1.0));
  CHECK(c.y == Catch::Approx(1.0));
}

TEST_CASE("kind accessors enforce the stored kind") {
  Geometry p = Geometry::point({1, 1});
  CHECK_THROWS_AS(p.line_vertices(), Error);
  CHECK_THROWS_AS(p.polygon_data(), Error);
  try {
    p.polygon_data();
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::argument);
  }
}

TEST_CASE("geometry equality is structural") {
  Geometry a = Geometry::line_string({{0, 0}, {1, 1}});
  Geometry b = Geometry::line_string({{0, 0}, {1, 1}});
  Geometry c = Geometry::line_string({{0, 0}, {1, 1.000001}});
  CHECK(a == b);
  CHECK_FALSE(a == c);
}
