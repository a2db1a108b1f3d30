#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "geomenc/corpus.hpp"
#include "geomenc/wkt.hpp"

using namespace geomenc;

namespace {

CorpusSpec small_spec(std::uint64_t seed) {
  CorpusSpec spec;
  spec.frame = Frame::make(0, 0, 100, 100);
  spec.n_line_strings = 40;
  spec.n_polygons = 40;
  spec.n_points = 5;
  spec.seed = seed;
  return spec;
}

}  // namespace

TEST_CASE("corpus generation is deterministic given the seed") {
  auto a = generate_corpus(small_spec(11));
  auto b = generate_corpus(small_spec(11));
  auto c = generate_corpus(small_spec(12));
  CHECK(corpus_to_geojson(a) == corpus_to_geojson(b));
  CHECK(corpus_to_geojson(a) != corpus_to_geojson(c));
}

TEST_CASE("every corpus sample fits in the frame with correct targets") {
  CorpusSpec spec = small_spec(21);
  auto corpus = generate_corpus(spec);
  REQUIRE(corpus.size() == 85);
  int n_lines = 0, n_polys = 0, n_points = 0;
  for (const PropertySample& s : corpus) {
    Frame bb = s.geometry.bounds();
    CHECK(bb.min_x >= spec.frame.min_x - 1e-9);
    CHECK(bb.max_x <= spec.frame.max_x + 1e-9);
    CHECK(bb.min_y >= spec.frame.min_y - 1e-9);
    CHECK(bb.max_y <= spec.frame.max_y + 1e-9);
    switch (s.geometry.kind()) {
      case GeometryKind::line_string: {
        ++n_lines;
        CHECK(s.targets.count("length") == 1);
        CHECK(s.targets.count("sinuosity") == 1);
        double c = s.targets.at("cos2theta"), sn = s.targets.at("sin2theta");
        CHECK(c * c + sn * sn == Catch::Approx(1.0).margin(1e-9));
        CHECK(s.targets.at("length") == Catch::Approx(length(s.geometry)));
        break;
      }
      case GeometryKind::polygon: {
        ++n_polys;
        CHECK(s.targets.count("area") == 1);
        CHECK(s.targets.count("char") == 1);
        CHECK(s.targets.at("char") > 0.0);
        CHECK(s.targets.at("char") <= 1.0 + 1e-12);
        break;
      }
      default:
        ++n_points;
        CHECK(s.targets.empty());
    }
  }
  CHECK(n_lines == 40);
  CHECK(n_polys == 40);
  CHECK(n_points == 5);
}

TEST_CASE("targets match recomputation from serialized WKT") {
  auto corpus = generate_corpus(small_spec(31));
  for (const PropertySample& s : corpus) {
    if (s.targets.empty()) continue;
    Geometry parsed = parse_wkt(write_wkt(s.geometry));
    auto recomputed = make_property_sample(parsed);
    REQUIRE(recomputed.targets.size() == s.targets.size());
    for (const auto& [k, v] : s.targets)
      CHECK(recomputed.targets.at(k) == Catch::Approx(v).margin(1e-12));
  }
}

TEST_CASE("corpus targets have usable spread") {
  CorpusSpec spec = small_spec(41);
  spec.n_line_strings = 300;
  spec.n_polygons = 300;
  spec.n_points = 0;
  auto corpus = generate_corpus(spec);
  auto spread = [&](const std::string& key) {
    double lo = 1e300, hi = -1e300;
    for (const auto& s : corpus) {
      auto it = s.targets.find(key);
      if (it == s.targets.end()) continue;
      lo = std::min(lo, it->second);
      hi = std::max(hi, it->second);
    }
    return hi - lo;
  };
  CHECK(spread("length") > 50.0);
  CHECK(spread("area") > 500.0);
  CHECK(spread("sinuosity") > 0.4);
  CHECK(spread("char") > 0.3);
  CHECK(spread("cos2theta") > 1.0);
}

TEST_CASE("corpus geojson round trip") {
  auto corpus = generate_corpus(small_spec(51));
  std::string text = corpus_to_geojson(corpus);
  auto loaded = corpus_from_geojson(text);
  REQUIRE(loaded.size() == corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    CHECK(loaded[i].geometry == corpus[i].geometry);
    for (const auto& [k, v] : corpus[i].targets)
      CHECK(loaded[i].targets.at(k) == v);  // exact: shortest round-trip text
  }
}

TEST_CASE("plain geojson without target properties gets them recomputed") {
  Geometry line = Geometry::line_string({{10, 10}, {30, 40}, {60, 45}});
  std::vector<FeatureItem> items{{line, {}, false, false}};
  auto loaded = corpus_from_geojson(write_geojson(items));
  REQUIRE(loaded.size() == 1);
  CHECK(loaded[0].targets.at("length") == Catch::Approx(length(line)));
  CHECK(loaded[0].targets.at("sinuosity") == Catch::Approx(sinuosity(line)));
}
