#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <vector>

#include "geomenc/dbscan.hpp"
#include "geomenc/encoding.hpp"
#include "geomenc/fixtures.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace geomenc;

namespace {

std::vector<DenseEncoding> as_encodings(const std::vector<std::vector<double>>& rows) {
  std::vector<DenseEncoding> out;
  for (const auto& r : rows) out.push_back(DenseEncoding{r, "g"});
  return out;
}

// Partition as a set of index sets, ignoring label numbering.
std::set<std::set<std::size_t>> partition_of(const std::vector<int>& labels) {
  std::map<int, std::set<std::size_t>> by_label;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] >= 0) by_label[labels[i]].insert(i);
  std::set<std::set<std::size_t>> out;
  for (auto& [l, s] : by_label) out.insert(std::move(s));
  return out;
}

struct DemoEncodings {
  std::vector<DenseEncoding> vectors;
  std::vector<std::string> groups;
};

DemoEncodings demo_encodings() {
  auto [ref, tiles] = make_grids(fixtures::clustering_demo_frame(),
                                 fixtures::clustering_demo_resolution());
  MppConfig cfg = MppConfig::make(ref);
  DemoEncodings d;
  for (const auto& shape : fixtures::clustering_demo_shapes()) {
    d.vectors.push_back(mpp_encode(shape.geometry, cfg));
    d.groups.push_back(shape.group);
  }
  return d;
}

double enc_distance(const DenseEncoding& a, const DenseEncoding& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = a.values[i] - b.values[i];
    s += d * d;
  }
  return std::sqrt(s);
}

// Single-link distance between two sets of indices.
double single_link(const std::vector<DenseEncoding>& v,
                   const std::vector<std::size_t>& a,
                   const std::vector<std::size_t>& b) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i : a)
    for (std::size_t j : b) best = std::min(best, enc_distance(v[i], v[j]));
  return best;
}

}  // namespace

TEST_CASE("identical vectors form a single cluster") {
  std::vector<std::vector<double>> rows(5, {0.3, 0.7, 0.1});
  auto labels = dbscan(as_encodings(rows), DbscanParams::make(0.5, 2)).labels;
  for (int l : labels) CHECK(l == 0);
}

TEST_CASE("two well-separated groups form two clusters") {
  std::vector<std::vector<double>> rows;
  for (int i = 0; i < 4; ++i) rows.push_back({0.0 + 0.01 * i, 0.0});
  for (int i = 0; i < 4; ++i) rows.push_back({10.0 + 0.01 * i, 0.0});
  auto result = dbscan(as_encodings(rows), DbscanParams::make(0.1, 2));
  CHECK(result.cluster_count() == 2);
  CHECK(result.labels[0] == result.labels[3]);
  CHECK(result.labels[4] == result.labels[7]);
  CHECK(result.labels[0] != result.labels[4]);
}

TEST_CASE("lone points are noise") {
  std::vector<std::vector<double>> rows{{0, 0}, {0.01, 0}, {5, 5}};
  auto labels = dbscan(as_encodings(rows), DbscanParams::make(0.1, 2)).labels;
  CHECK(labels[0] == 0);
  CHECK(labels[1] == 0);
  CHECK(labels[2] == -1);
}

TEST_CASE("mixed grid ids are rejected") {
  std::vector<DenseEncoding> v{{{0, 0}, "a"}, {{0, 0}, "b"}};
  CHECK_THROWS_AS(dbscan(v, DbscanParams::make(1, 2)), Error);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(DbscanParams::make(-1, 2), Error);
  CHECK_THROWS_AS(DbscanParams::make(1, 0), Error);
}

TEST_CASE("demo fixture clusters by shape category at eps 0.6") {
  DemoEncodings d = demo_encodings();
  auto result = dbscan(d.vectors, DbscanParams::make(0.6, 2));
  CHECK(result.cluster_count() == 5);
  // Same group. same cluster; different groups, different clusters.
  std::map<std::string, int> group_label;
  for (std::size_t i = 0; i < d.groups.size(); ++i) {
    CHECK(result.labels[i] >= 0);
    auto [it, inserted] = group_label.emplace(d.groups[i], result.labels[i]);
    CHECK(it->second == result.labels[i]);
  }
  CHECK(group_label.size() == 5);
}

TEST_CASE("demo fixture merge order follows the single-link oracle") {
  DemoEncodings d = demo_encodings();
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < d.groups.size(); ++i)
    groups[d.groups[i]].push_back(i);

  double m_long_short = single_link(d.vectors, groups["long-horizontal"],
                                    groups["short-horizontal"]);
  std::vector<std::size_t> horizontals = groups["long-horizontal"];
  horizontals.insert(horizontals.end(), groups["short-horizontal"].begin(),
                     groups["short-horizontal"].end());
  double m_points = single_link(d.vectors, groups["point"], horizontals);

  // Long and short horizontal lines merge first, points join afterwards.
  CHECK(m_long_short > 0.6);
  CHECK(m_points > m_long_short);

  auto at = [&](double eps) {
    return dbscan(d.vectors, DbscanParams::make(eps, 2));
  };
  auto merged_ls = at((m_long_short + m_points) / 2);
  CHECK(merged_ls.cluster_count() == 4);
  CHECK(merged_ls.labels[groups["long-horizontal"][0]] ==
        merged_ls.labels[groups["short-horizontal"][0]]);
  CHECK(merged_ls.labels[groups["point"][0]] !=
        merged_ls.labels[groups["long-horizontal"][0]]);

  double m_next = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> blob = horizontals;
  blob.insert(blob.end(), groups["point"].begin(), groups["point"].end());
  m_next = std::min(single_link(d.vectors, groups["hexagon"], blob),
                    single_link(d.vectors, groups["vertical"], blob));
  m_next = std::min(m_next, single_link(d.vectors, groups["hexagon"],
                                        groups["vertical"]));
  REQUIRE(m_points < m_next);
  auto merged_pts = at((m_points + m_next) / 2);
  CHECK(merged_pts.cluster_count() == 3);
  CHECK(merged_pts.labels[groups["point"][0]] ==
        merged_pts.labels[groups["long-horizontal"][0]]);
  CHECK(merged_pts.labels[groups["hexagon"][0]] !=
        merged_pts.labels[groups["vertical"][0]]);
}

TEST_CASE("shuffling input order never changes the partition") {
  Rng rng(2222);
  DemoEncodings d = demo_encodings();
  for (double eps : {0.4, 0.6, 0.9, 1.3, 2.0}) {
    auto base = partition_of(dbscan(d.vectors, DbscanParams::make(eps, 2)).labels);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<std::size_t> perm(d.vectors.size());
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      rng.shuffle(perm);
      std::vector<DenseEncoding> shuffled;
      for (std::size_t i : perm) shuffled.push_back(d.vectors[i]);
      auto labels = dbscan(shuffled, DbscanParams::make(eps, 2)).labels;
      // Map the shuffled partition back to original indices.
      std::map<int, std::set<std::size_t>> by_label;
      for (std::size_t k = 0; k < labels.size(); ++k)
        if (labels[k] >= 0) by_label[labels[k]].insert(perm[k]);
      std::set<std::set<std::size_t>> got;
      for (auto& [l, s] : by_label) got.insert(std::move(s));
      CHECK(got == base);
    }
  }
}

TEST_CASE("raising eps only coarsens the fixture partition") {
  DemoEncodings d = demo_encodings();
  std::vector<double> sweep{0.3, 0.45, 0.6, 0.8, 1.0, 1.4, 1.9, 2.5, 3.5};
  std::vector<std::set<std::set<std::size_t>>> parts;
  for (double eps : sweep)
    parts.push_back(partition_of(dbscan(d.vectors, DbscanParams::make(eps, 2)).labels));
  for (std::size_t k = 0; k + 1 < parts.size(); ++k) {
    for (const auto& fine : parts[k]) {
      bool contained = false;
      for (const auto& coarse : parts[k + 1]) {
        if (std::includes(coarse.begin(), coarse.end(), fine.begin(), fine.end()))
          contained = true;
      }
      CHECK(contained);
    }
  }
}

TEST_CASE("dbscan matches the brute-force density-reachability oracle") {
  Rng rng(515);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::vector<double>> rows;
    int n = 100;
    int dim = 4;
    for (int i = 0; i < n; ++i) {
      std::vector<double> r(dim);
      // Mixture of a few blobs plus uniform noise.
      if (rng.coin(0.8)) {
        int blob = rng.uniform_int(0, 3);
        for (int k = 0; k < dim; ++k) r[k] = blob * 2.0 + rng.normal(0, 0.3);
      } else {
        for (int k = 0; k < dim; ++k) r[k] = rng.uniform(-2, 10);
      }
      rows.push_back(std::move(r));
    }
    double eps = rng.uniform(0.3, 1.2);
    int min_pts = rng.uniform_int(2, 6);
    auto got = dbscan(as_encodings(rows), DbscanParams::make(eps, min_pts)).labels;
    auto want = oracles::brute_force_dbscan(rows, eps, min_pts);
    CHECK(got == want);
  }
}
