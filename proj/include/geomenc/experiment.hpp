#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "geomenc/corpus.hpp"
#include "geomenc/encoding.hpp"
#include "geomenc/errors.hpp"
#include "geomenc/metrics.hpp"
#include "geomenc/pairs.hpp"
#include "geomenc/probe.hpp"

namespace geomenc {

enum class EncoderKind { mpp, div };

inline const char* to_string(EncoderKind k) {
  return k == EncoderKind::mpp ? "mpp" : "div";
}

inline std::optional<EncoderKind> encoder_from_string(std::string_view s) {
  if (s == "mpp") return EncoderKind::mpp;
  if (s == "div") return EncoderKind::div;
  return std::nullopt;
}

struct ReportRow {
  std::string encoder;
  double resolution = 0;
  std::string task;
  std::string metric;
  double value = 0;
  std::uint64_t seed = 0;
};

struct EvalReport {
  std::vector<ReportRow> rows;

  std::string to_csv() const {
    std::string out = "encoder,resolution,task,metric,value,seed\n";
    for (const ReportRow& r : rows) {
      out += r.encoder;
      out += ',';
      out += format_double(r.resolution);
      out += ',';
      out += r.task;
      out += ',';
      out += r.metric;
      out += ',';
      out += format_double(r.value);
      out += ',';
      out += std::to_string(r.seed);
      out += '\n';
    }
    return out;
  }

  const ReportRow* find(std::string_view encoder, double resolution,
                        std::string_view task) const {
    for (const ReportRow& r : rows)
      if (r.encoder == encoder && r.resolution == resolution && r.task == task)
        return &r;
    return nullptr;
  }
};

inline const std::vector<std::string>& property_task_names() {
  static const std::vector<std::string> names{
      "linestring-length",      "linestring-orientation", "linestring-sinuosity",
      "polygon-area",           "polygon-orientation",    "polygon-char"};
  return names;
}

struct ExperimentConfig {
  Frame frame = Frame{0, 0, 100, 100};
  std::vector<EncoderKind> encoders{EncoderKind::mpp, EncoderKind::div};
  std::vector<double> resolutions;
  double mpp_scale = 0;  // 0: use the grid spacing
  bool orientation_mean_r2 = false;  // alternative to pooling the residuals
  int threads = 0;                   // 0: hardware concurrency
  std::uint64_t seed = 0;
};

namespace detail {

inline Eigen::MatrixXf encode_matrix(const std::vector<const Geometry*>& shapes,
                                     EncoderKind kind, const Frame& frame,
                                     double resolution, double mpp_scale) {
  auto [ref, tiles] = make_grids(frame, resolution);
  const int n_cols = ref.size();
  Eigen::MatrixXf x(static_cast<Eigen::Index>(shapes.size()), n_cols);
  MppConfig cfg = kind == EncoderKind::mpp ? MppConfig::make(ref, mpp_scale)
                                           : MppConfig{};
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    DenseEncoding e = kind == EncoderKind::mpp ? mpp_encode(*shapes[i], cfg)
                                               : div_encode(*shapes[i], tiles);
    for (int j = 0; j < n_cols; ++j)
      x(static_cast<Eigen::Index>(i), j) = static_cast<float>(e.values[j]);
  }
  return x;
}

struct SplitIdx {
  std::vector<std::size_t> train, val, test;
};

inline SplitIdx make_split(std::size_t n, const TrainConfig& cfg, Rng& rng) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  rng.shuffle(order);
  auto n_train = static_cast<std::size_t>(cfg.train_frac * static_cast<double>(n));
  auto n_val = static_cast<std::size_t>(cfg.val_frac * static_cast<double>(n));
  SplitIdx s;
  s.train.assign(order.begin(), order.begin() + n_train);
  s.val.assign(order.begin() + n_train, order.begin() + n_train + n_val);
  s.test.assign(order.begin() + n_train + n_val, order.end());
  if (s.train.size() < 10 || s.val.size() < 10 || s.test.size() < 10)
    throw_error(ErrorCode::argument, "need at least 10 samples per split");
  return s;
}

inline Eigen::MatrixXf gather_rows(const Eigen::MatrixXf& x,
                                   const std::vector<std::size_t>& idx) {
  Eigen::MatrixXf out(static_cast<Eigen::Index>(idx.size()), x.cols());
  for (std::size_t i = 0; i < idx.size(); ++i)
    out.row(static_cast<Eigen::Index>(i)) = x.row(static_cast<Eigen::Index>(idx[i]));
  return out;
}

struct RegressionOutcome {
  Mlp<float> model;
  double test_r2 = 0;
  std::vector<double> y_true, y_pred;  // de-standardized test series
};

// Trains one regression probe on a fixed split. Targets are standardized on
// the training split; reported predictions are mapped back.
inline RegressionOutcome fit_regression_on_split(const Eigen::MatrixXf& x,
                                                 const std::vector<double>& y,
                                                 const SplitIdx& split,
                                                 const TrainConfig& cfg, Rng& rng) {
  double mean = 0, var = 0;
  for (std::size_t i : split.train) mean += y[i];
  mean /= static_cast<double>(split.train.size());
  for (std::size_t i : split.train) var += (y[i] - mean) * (y[i] - mean);
  var /= static_cast<double>(split.train.size());
  double stddev = std::sqrt(var);
  if (!(stddev > 1e-12)) stddev = 1.0;

  auto targets = [&](const std::vector<std::size_t>& idx) {
    Eigen::VectorXf v(static_cast<Eigen::Index>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
      v(static_cast<Eigen::Index>(i)) =
          static_cast<float>((y[idx[i]] - mean) / stddev);
    return v;
  };

  auto fit = fit_mlp<float>(gather_rows(x, split.train), targets(split.train),
                            gather_rows(x, split.val), targets(split.val),
                            ProbeTask::regression, cfg, rng);

  RegressionOutcome out;
  Eigen::VectorXf pred =
      fit.best.predict(gather_rows(x, split.test), ProbeTask::regression);
  for (std::size_t i = 0; i < split.test.size(); ++i) {
    out.y_true.push_back(y[split.test[i]]);
    out.y_pred.push_back(static_cast<double>(pred(static_cast<Eigen::Index>(i))) *
                             stddev +
                         mean);
  }
  out.test_r2 = r2(out.y_true, out.y_pred);
  out.model = std::move(fit.best);
  return out;
}

struct BinaryOutcome {
  Mlp<float> model;
  double test_auc = 0;
};

inline BinaryOutcome fit_binary_on_split(const Eigen::MatrixXf& x,
                                         const std::vector<int>& labels,
                                         const SplitIdx& split,
                                         const TrainConfig& cfg, Rng& rng) {
  auto targets = [&](const std::vector<std::size_t>& idx) {
    Eigen::VectorXf v(static_cast<Eigen::Index>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
      v(static_cast<Eigen::Index>(i)) = labels[idx[i]] ? 1.0f : 0.0f;
    return v;
  };
  auto fit = fit_mlp<float>(gather_rows(x, split.train), targets(split.train),
                            gather_rows(x, split.val), targets(split.val),
                            ProbeTask::binary, cfg, rng);
  BinaryOutcome out;
  Eigen::VectorXf scores =
      fit.best.predict(gather_rows(x, split.test), ProbeTask::binary);
  std::vector<int> y_test;
  std::vector<double> s_test;
  for (std::size_t i = 0; i < split.test.size(); ++i) {
    y_test.push_back(labels[split.test[i]]);
    s_test.push_back(scores(static_cast<Eigen::Index>(i)));
  }
  out.test_auc = roc_auc(y_test, s_test);
  out.model = std::move(fit.best);
  return out;
}

inline void run_parallel(std::size_t n_cells, int threads,
                         const std::function<void(std::size_t)>& work) {
  unsigned n_workers = threads > 0
                           ? static_cast<unsigned>(threads)
                           : std::max(1u, std::thread::hardware_concurrency());
  n_workers = std::min<unsigned>(n_workers, static_cast<unsigned>(n_cells));
  if (n_workers <= 1) {
    for (std::size_t i = 0; i < n_cells; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n_cells) return;
      try {
        work(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < n_workers; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace detail

struct TrainProbeOutcome {
  std::vector<Mlp<float>> models;  // two entries for orientation tasks
  ReportRow row;
};

// Trains the probe for one (encoder, resolution, task) cell: encodes the
// matching corpus subset, splits, fits, and reports the test metric.
// Orientation trains separate cos(2 theta) and sin(2 theta) models on the
// same split and reports the pooled coefficient of determination.
inline TrainProbeOutcome train_probe(const std::vector<PropertySample>& corpus,
                                     EncoderKind encoder, const Frame& frame,
                                     double resolution, const std::string& task,
                                     const TrainConfig& train_cfg,
                                     std::uint64_t master_seed,
                                     bool orientation_mean_r2 = false,
                                     double mpp_scale = 0) {
  train_cfg.validate();
  bool wants_line = task.starts_with("linestring-");
  GeometryKind kind = wants_line ? GeometryKind::line_string : GeometryKind::polygon;
  std::vector<const Geometry*> shapes;
  std::vector<const PropertySample*> samples;
  for (const PropertySample& s : corpus) {
    if (s.geometry.kind() != kind) continue;
    shapes.push_back(&s.geometry);
    samples.push_back(&s);
  }
  if (shapes.empty())
    throw_error(ErrorCode::argument, "corpus has no samples for task " + task);

  Eigen::MatrixXf x =
      detail::encode_matrix(shapes, encoder, frame, resolution, mpp_scale);

  std::string tag = std::string("prop|") + to_string(encoder) + "|" +
                    format_double(resolution) + "|" + task;
  Rng rng = Rng::derive(master_seed, tag);
  detail::SplitIdx split = detail::make_split(shapes.size(), train_cfg, rng);

  auto target_series = [&](const std::string& key) {
    std::vector<double> y;
    y.reserve(samples.size());
    for (const PropertySample* s : samples) {
      auto it = s->targets.find(key);
      if (it == s->targets.end())
        throw_error(ErrorCode::argument, "sample lacks target " + key);
      y.push_back(it->second);
    }
    return y;
  };

  TrainProbeOutcome out;
  out.row = ReportRow{to_string(encoder), resolution, task, "r2", 0, master_seed};
  if (task.ends_with("-orientation")) {
    Rng rng_cos = Rng::derive(master_seed, tag + "|cos");
    Rng rng_sin = Rng::derive(master_seed, tag + "|sin");
    auto cos_fit = detail::fit_regression_on_split(x, target_series("cos2theta"),
                                                   split, train_cfg, rng_cos);
    auto sin_fit = detail::fit_regression_on_split(x, target_series("sin2theta"),
                                                   split, train_cfg, rng_sin);
    out.row.value = orientation_mean_r2
                        ? (cos_fit.test_r2 + sin_fit.test_r2) / 2
                        : pooled_r2(cos_fit.y_true, cos_fit.y_pred,
                                    sin_fit.y_true, sin_fit.y_pred);
    out.models.push_back(std::move(cos_fit.model));
    out.models.push_back(std::move(sin_fit.model));
  } else {
    std::string key = task.substr(task.find('-') + 1);
    if (key == "char") key = "char";
    auto fit = detail::fit_regression_on_split(x, target_series(key), split,
                                               train_cfg, rng);
    out.row.value = fit.test_r2;
    out.models.push_back(std::move(fit.model));
  }
  return out;
}

// Property-estimation matrix: every (encoder, resolution, task) cell,
// deterministic row order, cells dispatched to a worker pool.
inline EvalReport run_property_experiment(const std::vector<PropertySample>& corpus,
                                          const ExperimentConfig& cfg,
                                          const TrainConfig& train_cfg,
                                          const std::vector<std::string>& tasks =
                                              property_task_names()) {
  struct Cell {
    EncoderKind encoder;
    double resolution;
    std::string task;
  };
  std::vector<Cell> cells;
  for (EncoderKind e : cfg.encoders)
    for (double r : cfg.resolutions)
      for (const std::string& t : tasks) cells.push_back({e, r, t});

  std::vector<ReportRow> rows(cells.size());
  detail::run_parallel(cells.size(), cfg.threads, [&](std::size_t i) {
    const Cell& c = cells[i];
    rows[i] = train_probe(corpus, c.encoder, cfg.frame, c.resolution, c.task,
                          train_cfg, cfg.seed, cfg.orientation_mean_r2,
                          cfg.mpp_scale)
                  .row;
  });
  return EvalReport{std::move(rows)};
}

// Pairwise-relationship matrix. Inputs are the concatenated encodings of the
// two shapes; the metric is the rank-based ROC AUC on the test split.
inline EvalReport run_pairwise_experiment(
    const std::map<RelationKind, std::vector<PairSample>>& pairs_by_relation,
    const ExperimentConfig& cfg, const TrainConfig& train_cfg) {
  struct Cell {
    EncoderKind encoder;
    double resolution;
    RelationKind relation;
  };
  std::vector<Cell> cells;
  for (EncoderKind e : cfg.encoders)
    for (double r : cfg.resolutions)
      for (const auto& [rel, _] : pairs_by_relation) cells.push_back({e, r, rel});

  std::vector<ReportRow> rows(cells.size());
  detail::run_parallel(cells.size(), cfg.threads, [&](std::size_t i) {
    const Cell& c = cells[i];
    const std::vector<PairSample>& pairs = pairs_by_relation.at(c.relation);
    if (pairs.empty())
      throw_error(ErrorCode::argument, "no pairs for relation");
    std::vector<const Geometry*> a_shapes, b_shapes;
    std::vector<int> labels;
    for (const PairSample& p : pairs) {
      a_shapes.push_back(&p.a);
      b_shapes.push_back(&p.b);
      labels.push_back(p.label ? 1 : 0);
    }
    Eigen::MatrixXf xa = detail::encode_matrix(a_shapes, c.encoder, cfg.frame,
                                               c.resolution, cfg.mpp_scale);
    Eigen::MatrixXf xb = detail::encode_matrix(b_shapes, c.encoder, cfg.frame,
                                               c.resolution, cfg.mpp_scale);
    Eigen::MatrixXf x(xa.rows(), xa.cols() + xb.cols());
    x << xa, xb;

    std::string tag = std::string("pair|") + to_string(c.encoder) + "|" +
                      format_double(c.resolution) + "|" + to_string(c.relation);
    Rng rng = Rng::derive(cfg.seed, tag);
    detail::SplitIdx split = detail::make_split(pairs.size(), train_cfg, rng);
    auto fit = detail::fit_binary_on_split(x, labels, split, train_cfg, rng);
    rows[i] = ReportRow{to_string(c.encoder), c.resolution,
                        to_string(c.relation), "roc-auc", fit.test_auc, cfg.seed};
  });
  return EvalReport{std::move(rows)};
}

}  // namespace geomenc
