#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

#include "geomenc/encoding.hpp"
#include "geomenc/errors.hpp"

namespace geomenc {

struct DbscanParams {
  double eps = 0;    // >= 0, Euclidean distance in encoding space
  int min_pts = 2;   // neighborhood count including the point itself

  static DbscanParams make(double eps, int min_pts) {
    if (!(eps >= 0)) throw_error(ErrorCode::argument, "eps must be >= 0");
    if (min_pts < 1) throw_error(ErrorCode::argument, "min_pts must be >= 1");
    return DbscanParams{eps, min_pts};
  }
};

struct ClusterLabels {
  std::vector<int> labels;  // >= 0 cluster id, -1 noise

  int cluster_count() const {
    int n = -1;
    for (int l : labels) n = std::max(n, l);
    return n + 1;
  }
};

// Euclidean DBSCAN over encoding vectors. Cluster ids are assigned by
// core-point expansion in index order; border points attach to the nearest
// core point (ties to the lowest core index), which makes the partition
// independent of input order up to renumbering.
inline ClusterLabels dbscan(const std::vector<DenseEncoding>& vectors,
                            const DbscanParams& params) {
  const std::size_t n = vectors.size();
  ClusterLabels out;
  out.labels.assign(n, -1);
  if (n == 0) return out;
  const std::size_t dim = vectors[0].size();
  for (const DenseEncoding& v : vectors) {
    if (v.grid_id != vectors[0].grid_id)
      throw_error(ErrorCode::argument, "dbscan inputs mix grid ids");
    if (v.size() != dim)
      throw_error(ErrorCode::argument, "dbscan inputs mix encoding lengths");
  }

  auto dist2 = [&](std::size_t i, std::size_t j) {
    double s = 0;
    for (std::size_t k = 0; k < dim; ++k) {
      double d = vectors[i].values[k] - vectors[j].values[k];
      s += d * d;
    }
    return s;
  };
  const double eps2 = params.eps * params.eps;

  std::vector<std::vector<std::size_t>> neighbors(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (dist2(i, j) <= eps2) neighbors[i].push_back(j);

  std::vector<bool> core(n, false);
  for (std::size_t i = 0; i < n; ++i)
    core[i] = neighbors[i].size() >= static_cast<std::size_t>(params.min_pts);

  // Connected components of core points.
  int next_cluster = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!core[i] || out.labels[i] != -1) continue;
    std::queue<std::size_t> q;
    q.push(i);
    out.labels[i] = next_cluster;
    while (!q.empty()) {
      std::size_t c = q.front();
      q.pop();
      for (std::size_t m : neighbors[c]) {
        if (core[m] && out.labels[m] == -1) {
          out.labels[m] = next_cluster;
          q.push(m);
        }
      }
    }
    ++next_cluster;
  }

  // Border points.
  for (std::size_t i = 0; i < n; ++i) {
    if (core[i] || out.labels[i] != -1) continue;
    double best = std::numeric_limits<double>::infinity();
    int label = -1;
    for (std::size_t m : neighbors[i]) {
      if (!core[m]) continue;
      double d = dist2(i, m);
      if (d < best) {
        best = d;
        label = out.labels[m];
      }
    }
    out.labels[i] = label;
  }
  return out;
}

}  // namespace geomenc
