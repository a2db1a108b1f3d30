#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "geomenc/geojson.hpp"
#include "geomenc/geometry_ops.hpp"
#include "geomenc/wkt.hpp"
#include "test_util.hpp"

using namespace geomenc;

namespace {

Geometry random_geometry(Rng& rng) {
  switch (rng.uniform_int(0, 5)) {
    case 0:
      return Geometry::point(test_util::random_point(rng));
    case 1:
      return test_util::random_polyline(rng, rng.uniform_int(2, 12), 4.0, 0.6);
    case 2:
      return test_util::random_polygon(rng, test_util::random_point(rng, 20, 80),
                                       rng.uniform(4, 20), rng.uniform_int(5, 12), 0.4);
    case 3: {
      std::vector<Point2> pts;
      int n = rng.uniform_int(1, 6);
      for (int i = 0; i < n; ++i) pts.push_back(test_util::random_point(rng));
      return Geometry::multi_point(std::move(pts));
    }
    case 4: {
      std::vector<std::vector<Point2>> parts;
      int n = rng.uniform_int(1, 4);
      for (int i = 0; i < n; ++i)
        parts.push_back(
            test_util::random_polyline(rng, 5, 3.0, 0.5, test_util::random_point(rng))
                .line_vertices());
      return Geometry::multi_line_string(std::move(parts));
    }
    default: {
      std::vector<PolygonData> parts;
      int n = rng.uniform_int(1, 3);
      for (int i = 0; i < n; ++i)
        parts.push_back(PolygonData{
            test_util::star_ring(rng, test_util::random_point(rng, 100 * i + 20, 100 * i + 80),
                                 rng.uniform(4, 15), 8, 0.3),
            {}});
      return Geometry::multi_polygon(std::move(parts));
    }
  }
}

}  // namespace

TEST_CASE("wkt parses the basic forms") {
  Geometry p = parse_wkt("POINT (3 4)");
  CHECK(p.as_point() == Point2{3, 4});

  Geometry sq = parse_wkt("POLYGON ((0 0, 4 0, 4 4, 0 4, 0 0))");
  CHECK(area(sq) == Catch::Approx(16.0));

  Geometry ls = parse_wkt("linestring(0 0, 1 1, 2 0)");  // case-insensitive
  CHECK(ls.line_vertices().size() == 3);

  Geometry mp1 = parse_wkt("MULTIPOINT ((1 2), (3 4))");
  Geometry mp2 = parse_wkt("MULTIPOINT (1 2, 3 4)");
  CHECK(mp1 == mp2);

  Geometry mpoly = parse_wkt(
      "MULTIPOLYGON (((0 0, 1 0, 1 1, 0 1, 0 0)), ((2 2, 3 2, 3 3, 2 3, 2 2)))");
  CHECK(mpoly.polygon_parts().size() == 2);

  Geometry holed = parse_wkt(
      "POLYGON ((0 0, 10 0, 10 10, 0 10, 0 0), (2 2, 2 4, 4 4, 4 2, 2 2))");
  CHECK(holed.polygon_data().holes.size() == 1);

  CHECK(parse_wkt(" POINT\t( -1.5e2 0.25 ) ").as_point() == Point2{-150, 0.25});
}

TEST_CASE("wkt rejections carry positions and codes") {
  CHECK_THROWS_AS(parse_wkt("POINT EMPTY"), Error);
  CHECK_THROWS_AS(parse_wkt("GEOMETRYCOLLECTION (POINT (1 1))"), Error);
  try {
    parse_wkt("GEOMETRYCOLLECTION (POINT (1 1))");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unsupported);
  }
  try {
    parse_wkt("POINT (1, 2)");
    FAIL("expected parse failure");
  } catch (const ParseException& e) {
    CHECK(e.info().byte_offset <= std::string("POINT (1, 2)").size());
  }
  CHECK_THROWS_AS(parse_wkt("POINT (1 2) garbage"), ParseException);
  CHECK_THROWS_AS(parse_wkt("LINESTRING (0 0)"), Error);  // validation: one vertex
  CHECK_THROWS_AS(parse_wkt("POLYGON ((0 0, 1 0, 1 1, 0 1))"), Error);  // open ring
  CHECK_THROWS_AS(parse_wkt(""), ParseException);
  CHECK_THROWS_AS(parse_wkt("TRIANGLE ((0 0, 1 0, 0 1, 0 0))"), ParseException);
}

TEST_CASE("wkt round trips are byte-stable") {
  Rng rng(404);
  for (int trial = 0; trial < 1000; ++trial) {
    Geometry g = random_geometry(rng);
    std::string once = write_wkt(g);
    Geometry parsed = parse_wkt(once);
    CHECK(parsed == g);  // shortest round-trip formatting is exact
    std::string twice = write_wkt(parsed);
    CHECK(twice == once);
  }
}

TEST_CASE("geojson parses geometries, features, and collections") {
  auto items = parse_geojson(R"({"type":"Point","coordinates":[1,2]})");
  REQUIRE(items.size() == 1);
  CHECK(items[0].geometry.as_point() == Point2{1, 2});

  auto fc = parse_geojson(R"({
    "type": "FeatureCollection",
    "features": [
      {"type":"Feature","geometry":{"type":"Point","coordinates":[0,0]},
       "properties":{"name":"a","rank":1}},
      {"type":"Feature","geometry":{"type":"LineString","coordinates":[[0,0],[1,1]]},
       "properties":null}
    ]})");
  REQUIRE(fc.size() == 2);
  CHECK(fc[0].geometry.kind() == GeometryKind::point);
  CHECK(fc[0].properties.at("name") == "\"a\"");
  CHECK(fc[0].properties.at("rank") == "1");
  CHECK(fc[1].geometry.kind() == GeometryKind::line_string);
}

TEST_CASE("geojson drops extra dimensions with a warning") {
  auto items = parse_geojson(R"({"type":"Point","coordinates":[1,2,50]})");
  CHECK(items[0].geometry.as_point() == Point2{1, 2});
  CHECK(items[0].dropped_extra_dims);
}

TEST_CASE("geojson auto-closes open rings with a warning") {
  auto items = parse_geojson(
      R"({"type":"Polygon","coordinates":[[[0,0],[4,0],[4,4],[0,4]]]})");
  CHECK(items[0].auto_closed_ring);
  CHECK(area(items[0].geometry) == Catch::Approx(16.0));
}

TEST_CASE("geojson errors name the feature index") {
  const char* bad = R"({
    "type": "FeatureCollection",
    "features": [
      {"type":"Feature","geometry":{"type":"Point","coordinates":[0,0]},"properties":{}},
      {"type":"Feature","geometry":{"type":"LineString","coordinates":[[0,0]]},"properties":{}}
    ]})";
  CHECK_THROWS_WITH(parse_geojson(bad),
                    Catch::Matchers::ContainsSubstring("feature 1"));
  CHECK_THROWS_AS(parse_geojson("{not json"), ParseException);
  CHECK_THROWS_AS(
      parse_geojson(R"({"type":"GeometryCollection","geometries":[]})"), Error);
}

TEST_CASE("geojson round trip preserves geometry and properties") {
  Rng rng(808);
  std::vector<FeatureItem> items;
  for (int i = 0; i < 500; ++i) {
    FeatureItem item{random_geometry(rng), {}, false, false};
    item.properties["id"] = std::to_string(i);
    item.properties["tag"] = "\"shape-" + std::to_string(i % 7) + "\"";
    item.properties["weight"] = format_double(rng.uniform(0, 10));
    items.push_back(std::move(item));
  }
  std::string once = write_geojson(items);
  auto parsed = parse_geojson(once);
  REQUIRE(parsed.size() == items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    CHECK(parsed[i].geometry == items[i].geometry);
    CHECK(parsed[i].properties == items[i].properties);
  }
  CHECK(write_geojson(parsed) == once);
}

TEST_CASE("parsers never crash on arbitrary bytes") {
  Rng rng(1337);
  int wkt_ok = 0, json_ok = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    std::string s;
    int len = rng.uniform_int(0, 60);
    for (int i = 0; i < len; ++i)
      s += static_cast<char>(rng.uniform_int(1, 255));
    try {
      (void)parse_wkt(s);
      ++wkt_ok;
    } catch (const Error&) {
    }
    try {
      (void)parse_geojson(s);
      ++json_ok;
    } catch (const Error&) {
    }
  }
  // Random bytes essentially never form a valid document.
  CHECK(wkt_ok + json_ok < 10);
}
