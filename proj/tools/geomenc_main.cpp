// geomenc: batch CLI for MPP/DIV geometry encoding, point decoding,
// encoding-space clustering, the continuity demo, and the probe-model
// evaluation experiments.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "geomenc/geomenc.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;
using namespace geomenc;

namespace {

constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kUsage = 1, kDataError = 2, kInternal = 3 };

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw_error(ErrorCode::io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw_error(ErrorCode::io, "cannot write " + path.string());
  out << content;
}

// Flat JSON config file; flags given on the command line win.
json load_config_overlay(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    std::string path;
    if (arg == "--config" && i + 1 < argc)
      path = argv[i + 1];
    else if (arg.rfind("--config=", 0) == 0)
      path = arg.substr(9);
    if (!path.empty()) {
      json cfg = json::parse(read_file(path), nullptr, true, true);
      if (!cfg.is_object())
        throw_error(ErrorCode::config, "config file must hold a JSON object");
      return cfg;
    }
  }
  return json::object();
}

// Applies config values to any option the user did not pass explicitly.
void apply_overlay(CLI::App* cmd, const json& overlay) {
  if (overlay.empty()) return;
  for (CLI::Option* opt : cmd->get_options()) {
    std::string name = opt->get_single_name();
    if (name.empty() || !overlay.contains(name)) continue;
    if (opt->count() > 0) continue;
    const json& v = overlay.at(name);
    std::vector<std::string> args;
    if (v.is_array())
      for (const auto& e : v)
        args.push_back(e.is_string() ? e.get<std::string>() : e.dump());
    else
      args.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    if (args.empty()) continue;
    for (const std::string& a : args) opt->add_result(a);
    opt->run_callback();
  }
}

struct FeatureInput {
  std::string id;
  Geometry geometry;
};

// Sniffs GeoJSON (leading '{' or '[') versus newline-separated WKT.
std::vector<FeatureInput> read_features(const std::string& path) {
  std::string text = read_file(path);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  std::vector<FeatureInput> out;
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    auto items = parse_geojson(text);
    for (std::size_t i = 0; i < items.size(); ++i) {
      std::string id = std::to_string(i);
      auto it = items[i].properties.find("id");
      if (it != items[i].properties.end()) {
        id = it->second;
        if (id.size() >= 2 && id.front() == '"' && id.back() == '"')
          id = id.substr(1, id.size() - 2);
      }
      out.push_back({std::move(id), std::move(items[i].geometry)});
    }
    return out;
  }
  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back({std::to_string(out.size()), parse_wkt(line)});
    } catch (const Error& e) {
      throw_error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

fs::path ensure_out_dir(const std::string& out) {
  if (out.empty()) throw_error(ErrorCode::config, "--out directory is required");
  fs::path dir(out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw_error(ErrorCode::io, "cannot create " + out + ": " + ec.message());
  return dir;
}

void write_manifest(const fs::path& dir, const std::string& subcommand,
                    std::uint64_t seed, const ordered_json& config,
                    const std::map<std::string, double>& timings_ms) {
  ordered_json m;
  m["tool"] = "geomenc";
  m["version"] = kVersion;
  m["subcommand"] = subcommand;
  m["seed"] = seed;
  m["config"] = config;
  ordered_json t;
  for (const auto& [k, v] : timings_ms) t[k] = v;
  m["timings_ms"] = std::move(t);
  write_file(dir / "manifest.json", m.dump(2) + "\n");
}

Frame frame_from_flag(const std::vector<double>& wh) {
  if (wh.size() != 2)
    throw_error(ErrorCode::config, "--frame expects two values: W H");
  return Frame::make(0, 0, wh[0], wh[1]);
}

// ---------------------------------------------------------------------------

struct EncodeArgs {
  std::string input, out, method = "mpp";
  std::vector<double> frame{100, 100};
  double resolution = 10;
  double scale = 0;
  double threshold = -1;  // < 0: dense output
  std::string format = "csv";
};

int cmd_encode(const EncodeArgs& a) {
  Stopwatch total;
  if (a.input.empty()) throw_error(ErrorCode::config, "--input is required");
  Frame frame = frame_from_flag(a.frame);
  auto [ref, tiles] = make_grids(frame, a.resolution);
  auto features = read_features(a.input);

  Stopwatch enc_watch;
  std::vector<EncodedRow> rows;
  MppConfig cfg = a.method == "mpp" ? MppConfig::make(ref, a.scale) : MppConfig{};
  for (const FeatureInput& f : features) {
    DenseEncoding e = a.method == "mpp" ? mpp_encode(f.geometry, cfg)
                                        : div_encode(f.geometry, tiles);
    rows.push_back({f.id, std::move(e)});
  }
  double encode_ms = enc_watch.ms();

  fs::path dir = ensure_out_dir(a.out);
  bool sparse = a.threshold >= 0;
  if (sparse || a.format == "json") {
    EncodingFile file{frame, a.resolution, a.method,
                      a.method == "mpp" ? cfg.s : 0.0,
                      sparse ? std::optional<double>(a.threshold) : std::nullopt,
                      std::move(rows)};
    write_file(dir / "encodings.json", encodings_to_json(file));
  } else {
    write_file(dir / "encodings.csv",
               encodings_to_csv(rows, static_cast<std::size_t>(ref.size())));
  }

  ordered_json cfg_json{{"input", a.input},
                        {"method", a.method},
                        {"frame", a.frame},
                        {"resolution", a.resolution},
                        {"scale", a.method == "mpp" ? cfg.s : 0.0},
                        {"threshold", a.threshold},
                        {"format", sparse ? "json" : a.format},
                        {"features", features.size()}};
  write_manifest(dir, "encode", 0, cfg_json,
                 {{"encode", encode_ms}, {"total", total.ms()}});
  return kOk;
}

struct DecodeArgs {
  std::string input, out;
  std::vector<double> frame{100, 100};
  double resolution = 0;  // required for CSV input
  double scale = 0;
  double tolerance = 1e-6;
};

int cmd_decode_point(const DecodeArgs& a) {
  Stopwatch total;
  if (a.input.empty()) throw_error(ErrorCode::config, "--input is required");
  std::string text = read_file(a.input);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  bool is_json = first != std::string::npos && text[first] == '{';

  Frame frame{0, 0, 1, 1};
  double resolution = 0, scale = 0;
  std::vector<EncodedRow> rows;
  if (is_json) {
    EncodingFile file = encodings_from_json(text);
    if (file.method != "mpp")
      throw_error(ErrorCode::argument, "decode-point needs MPP encodings");
    frame = file.frame;
    resolution = file.resolution;
    scale = file.s;
    rows = std::move(file.rows);
  } else {
    frame = frame_from_flag(a.frame);
    if (!(a.resolution > 0))
      throw_error(ErrorCode::config, "--resolution is required for CSV input");
    resolution = a.resolution;
    auto [ref, tiles] = make_grids(frame, resolution);
    scale = a.scale > 0 ? a.scale : resolution;
    rows = encodings_from_csv(text, ref.id, static_cast<std::size_t>(ref.size()));
  }
  auto [ref, tiles] = make_grids(frame, resolution);
  MppConfig cfg = MppConfig::make(ref, scale);

  std::string csv = "id,x,y,residual,status\n";
  std::vector<FeatureItem> points;
  std::size_t failures = 0;
  double worst_residual = 0;
  for (const EncodedRow& r : rows) {
    try {
      DecodeResult d = decode_point(r.dense, cfg, a.tolerance);
      worst_residual = std::max(worst_residual, d.residual);
      csv += r.id + "," + format_double(d.point.x) + "," + format_double(d.point.y) +
             "," + format_double(d.residual) + ",ok\n";
      FeatureItem item{Geometry::point(d.point), {}, false, false};
      item.properties["id"] = "\"" + r.id + "\"";
      item.properties["residual"] = format_double(d.residual);
      points.push_back(std::move(item));
    } catch (const Error& e) {
      ++failures;
      csv += r.id + ",,,,error: " + e.what() + "\n";
    }
  }

  fs::path dir = ensure_out_dir(a.out);
  write_file(dir / "decoded.csv", csv);
  write_file(dir / "decoded.geojson", write_geojson(points));
  ordered_json cfg_json{{"input", a.input},
                        {"resolution", resolution},
                        {"scale", scale},
                        {"tolerance", a.tolerance},
                        {"rows", rows.size()},
                        {"failures", failures},
                        {"max_residual", worst_residual}};
  write_manifest(dir, "decode-point", 0, cfg_json, {{"total", total.ms()}});
  if (failures > 0) {
    std::cerr << failures << " row(s) failed to decode\n";
    return kDataError;
  }
  return kOk;
}

struct ClusterArgs {
  std::string input, out;
  std::vector<double> frame{100, 100};
  double resolution = 0;
  double eps = 0.6;
  int min_pts = 2;
};

int cmd_cluster(const ClusterArgs& a) {
  Stopwatch total;
  if (a.input.empty()) throw_error(ErrorCode::config, "--input is required");
  std::string text = read_file(a.input);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  std::vector<EncodedRow> rows;
  if (first != std::string::npos && text[first] == '{') {
    rows = encodings_from_json(text).rows;
  } else {
    if (!(a.resolution > 0))
      throw_error(ErrorCode::config, "--resolution is required for CSV input");
    auto [ref, tiles] = make_grids(frame_from_flag(a.frame), a.resolution);
    rows = encodings_from_csv(text, ref.id, static_cast<std::size_t>(ref.size()));
  }
  std::vector<DenseEncoding> vectors;
  vectors.reserve(rows.size());
  for (EncodedRow& r : rows) vectors.push_back(std::move(r.dense));
  ClusterLabels labels = dbscan(vectors, DbscanParams::make(a.eps, a.min_pts));

  std::string csv = "id,label\n";
  for (std::size_t i = 0; i < rows.size(); ++i)
    csv += rows[i].id + "," + std::to_string(labels.labels[i]) + "\n";
  fs::path dir = ensure_out_dir(a.out);
  write_file(dir / "labels.csv", csv);
  ordered_json cfg_json{{"input", a.input},
                        {"eps", a.eps},
                        {"min_pts", a.min_pts},
                        {"clusters", labels.cluster_count()}};
  write_manifest(dir, "cluster", 0, cfg_json, {{"total", total.ms()}});
  return kOk;
}

struct ContinuityArgs {
  std::string trajectory, out;
  std::vector<double> frame{90, 90};
  double resolution = 30;
  double scale = 0;
};

int cmd_continuity(const ContinuityArgs& a) {
  Stopwatch total;
  std::vector<Point2> steps;
  if (a.trajectory.empty()) {
    steps = fixtures::continuity_trajectory();
  } else {
    std::istringstream in(read_file(a.trajectory));
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
      ++n;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      std::size_t comma = line.find(',');
      double x, y;
      if (comma == std::string::npos ||
          !parse_double(std::string_view(line).substr(0, comma), x) ||
          !parse_double(std::string_view(line).substr(comma + 1), y))
        throw_error(ErrorCode::parse,
                    "trajectory line " + std::to_string(n) + ": expected x,y");
      steps.push_back({x, y});
    }
  }
  Frame frame = frame_from_flag(a.frame);
  auto [ref, tiles] = make_grids(frame, a.resolution);
  MppConfig cfg = MppConfig::make(ref, a.scale);

  std::vector<EncodedRow> mpp_rows, div_rows;
  std::set<std::vector<double>> mpp_unique, div_unique;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    Geometry g = Geometry::point(steps[i]);
    DenseEncoding m = mpp_encode(g, cfg);
    DenseEncoding d = div_encode(g, tiles);
    mpp_unique.insert(m.values);
    div_unique.insert(d.values);
    mpp_rows.push_back({std::to_string(i), std::move(m)});
    div_rows.push_back({std::to_string(i), std::move(d)});
  }

  fs::path dir = ensure_out_dir(a.out);
  auto n = static_cast<std::size_t>(ref.size());
  write_file(dir / "continuity_mpp.csv", encodings_to_csv(mpp_rows, n));
  write_file(dir / "continuity_div.csv", encodings_to_csv(div_rows, n));
  ordered_json summary{{"steps", steps.size()},
                       {"mpp_unique", mpp_unique.size()},
                       {"div_unique", div_unique.size()}};
  write_file(dir / "summary.json", summary.dump(2) + "\n");
  ordered_json cfg_json{{"trajectory", a.trajectory.empty() ? "builtin" : a.trajectory},
                        {"frame", a.frame},
                        {"resolution", a.resolution},
                        {"scale", cfg.s}};
  write_manifest(dir, "continuity", 0, cfg_json, {{"total", total.ms()}});
  return kOk;
}

struct GenCorpusArgs {
  std::string out;
  std::vector<double> frame{100, 100};
  int lines = 1000, polygons = 1000, points = 0;
  std::uint64_t seed = 0;
};

int cmd_gen_corpus(const GenCorpusArgs& a) {
  Stopwatch total;
  CorpusSpec spec;
  spec.frame = frame_from_flag(a.frame);
  spec.n_line_strings = a.lines;
  spec.n_polygons = a.polygons;
  spec.n_points = a.points;
  spec.seed = a.seed;
  auto corpus = generate_corpus(spec);
  fs::path dir = ensure_out_dir(a.out);
  write_file(dir / "corpus.geojson", corpus_to_geojson(corpus));
  ordered_json cfg_json{{"frame", a.frame},
                        {"lines", a.lines},
                        {"polygons", a.polygons},
                        {"points", a.points}};
  write_manifest(dir, "gen-corpus", a.seed, cfg_json, {{"total", total.ms()}});
  return kOk;
}

struct EvalCommonArgs {
  std::string out;
  std::vector<double> frame{100, 100};
  std::vector<double> resolutions;
  std::vector<std::string> encoders{"mpp", "div"};
  double scale = 0;
  int epochs = 300, batch = 256, patience = 50, threads = 0;
  double lr = 1e-3;
  std::uint64_t seed = 0;
};

TrainConfig train_config_from(const EvalCommonArgs& a) {
  TrainConfig tc;
  tc.max_epochs = a.epochs;
  tc.batch_size = a.batch;
  tc.patience = a.patience;
  tc.learning_rate = a.lr;
  tc.seed = a.seed;
  return tc;
}

ExperimentConfig experiment_config_from(const EvalCommonArgs& a) {
  ExperimentConfig cfg;
  cfg.frame = frame_from_flag(a.frame);
  cfg.resolutions = a.resolutions;
  cfg.mpp_scale = a.scale;
  cfg.threads = a.threads;
  cfg.seed = a.seed;
  cfg.encoders.clear();
  for (const std::string& e : a.encoders) {
    auto k = encoder_from_string(e);
    if (!k) throw_error(ErrorCode::config, "unknown encoder '" + e + "'");
    cfg.encoders.push_back(*k);
  }
  return cfg;
}

// One grouped bar chart per task: metric against resolution, one series per
// encoder.
void write_report_charts(const fs::path& dir, const EvalReport& report,
                         const ExperimentConfig& cfg,
                         const std::vector<std::string>& tasks,
                         const std::string& metric_label) {
  std::vector<std::string> res_labels;
  for (double r : cfg.resolutions) res_labels.push_back(format_double(r));
  for (const std::string& task : tasks) {
    std::vector<ChartSeries> series;
    for (EncoderKind e : cfg.encoders) {
      ChartSeries s{to_string(e), {}};
      for (double r : cfg.resolutions) {
        const ReportRow* row = report.find(to_string(e), r, task);
        s.values.push_back(row ? row->value : 0.0);
      }
      series.push_back(std::move(s));
    }
    std::string file = "chart_" + task + ".svg";
    write_file(dir / file,
               bar_chart_svg(task, res_labels, series, 0, 1, metric_label));
  }
}

struct EvalPropertiesArgs : EvalCommonArgs {
  std::string corpus;
  int lines = 4000, polygons = 4000;
  bool orientation_mean_r2 = false;
};

int cmd_eval_properties(const EvalPropertiesArgs& a) {
  Stopwatch total;
  std::vector<PropertySample> corpus;
  Stopwatch gen_watch;
  if (!a.corpus.empty()) {
    corpus = corpus_from_geojson(read_file(a.corpus));
  } else {
    CorpusSpec spec;
    spec.frame = frame_from_flag(a.frame);
    spec.n_line_strings = a.lines;
    spec.n_polygons = a.polygons;
    spec.seed = a.seed;
    corpus = generate_corpus(spec);
  }
  double gen_ms = gen_watch.ms();

  ExperimentConfig cfg = experiment_config_from(a);
  if (cfg.resolutions.empty()) cfg.resolutions = {25, 12.5};
  cfg.orientation_mean_r2 = a.orientation_mean_r2;
  TrainConfig tc = train_config_from(a);

  Stopwatch train_watch;
  EvalReport report = run_property_experiment(corpus, cfg, tc);
  double train_ms = train_watch.ms();

  fs::path dir = ensure_out_dir(a.out);
  write_file(dir / "report.csv", report.to_csv());
  write_report_charts(dir, report, cfg, property_task_names(), "test R^2");
  ordered_json cfg_json{{"corpus", a.corpus.empty() ? "generated" : a.corpus},
                        {"lines", a.lines},
                        {"polygons", a.polygons},
                        {"frame", a.frame},
                        {"resolutions", cfg.resolutions},
                        {"encoders", a.encoders},
                        {"epochs", a.epochs},
                        {"batch", a.batch},
                        {"lr", a.lr},
                        {"patience", a.patience},
                        {"threads", a.threads},
                        {"orientation_mean_r2", a.orientation_mean_r2}};
  write_manifest(dir, "eval-properties", a.seed, cfg_json,
                 {{"corpus", gen_ms}, {"train", train_ms}, {"total", total.ms()}});
  return kOk;
}

struct EvalPairwiseArgs : EvalCommonArgs {
  int pairs = 4000;  // per relation, balanced
  std::vector<std::string> relations;
};

int cmd_eval_pairwise(const EvalPairwiseArgs& a) {
  Stopwatch total;
  std::vector<RelationKind> relations;
  if (a.relations.empty()) {
    relations = {RelationKind::point_in_polygon,
                 RelationKind::point_on_line_string,
                 RelationKind::line_line_intersect,
                 RelationKind::line_intersects_polygon,
                 RelationKind::polygon_intersects_polygon,
                 RelationKind::polygon_borders_polygon};
  } else {
    for (const std::string& name : a.relations) {
      auto k = relation_from_string(name);
      if (!k) throw_error(ErrorCode::config, "unknown relation '" + name + "'");
      relations.push_back(*k);
    }
  }

  ExperimentConfig cfg = experiment_config_from(a);
  if (cfg.resolutions.empty()) cfg.resolutions = {12.5};
  TrainConfig tc = train_config_from(a);

  Stopwatch gen_watch;
  PairGenConfig pair_cfg;
  pair_cfg.frame = cfg.frame;
  std::map<RelationKind, std::vector<PairSample>> pairs;
  for (RelationKind k : relations) {
    Rng rng = Rng::derive(a.seed, std::string("pairs|") + to_string(k));
    pairs[k] = generate_pairs(k, a.pairs / 2, a.pairs - a.pairs / 2, pair_cfg, rng);
  }
  double gen_ms = gen_watch.ms();

  Stopwatch train_watch;
  EvalReport report = run_pairwise_experiment(pairs, cfg, tc);
  double train_ms = train_watch.ms();

  fs::path dir = ensure_out_dir(a.out);
  write_file(dir / "report.csv", report.to_csv());
  std::vector<std::string> relation_names;
  for (RelationKind k : relations) relation_names.push_back(to_string(k));
  // One bar chart per resolution: relation on the x axis.
  for (double r : cfg.resolutions) {
    std::vector<ChartSeries> series;
    for (EncoderKind e : cfg.encoders) {
      ChartSeries s{to_string(e), {}};
      for (const std::string& rel : relation_names) {
        const ReportRow* row = report.find(to_string(e), r, rel);
        s.values.push_back(row ? row->value : 0.0);
      }
      series.push_back(std::move(s));
    }
    write_file(dir / ("chart_pairwise_" + format_double(r) + ".svg"),
               bar_chart_svg("pairwise relations @ " + format_double(r),
                             relation_names, series, 0, 1, "test ROC AUC"));
  }
  ordered_json cfg_json{{"pairs_per_relation", a.pairs},
                        {"relations", relation_names},
                        {"frame", a.frame},
                        {"resolutions", cfg.resolutions},
                        {"encoders", a.encoders},
                        {"epochs", a.epochs},
                        {"batch", a.batch},
                        {"lr", a.lr},
                        {"patience", a.patience},
                        {"threads", a.threads}};
  write_manifest(dir, "eval-pairwise", a.seed, cfg_json,
                 {{"pairs", gen_ms}, {"train", train_ms}, {"total", total.ms()}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MPP/DIV geometry encoding toolkit"};
  app.require_subcommand(1);
  app.fallthrough(true);
  app.set_version_flag("--version", kVersion);

  std::string config_path;
  app.add_option("--config", config_path, "JSON config file (flags win)")
      ->configurable(false);

  EncodeArgs enc;
  CLI::App* c_enc = app.add_subcommand("encode", "Encode WKT/GeoJSON features");
  c_enc->add_option("--input", enc.input, "WKT lines or GeoJSON file");
  c_enc->add_option("--out", enc.out, "output directory");
  c_enc->add_option("--method", enc.method, "mpp | div")
      ->check(CLI::IsMember({"mpp", "div"}));
  c_enc->add_option("--frame", enc.frame, "frame size: W H")->expected(2);
  c_enc->add_option("--resolution", enc.resolution, "grid spacing");
  c_enc->add_option("--scale", enc.scale, "MPP kernel scale (default: resolution)");
  c_enc->add_option("--threshold", enc.threshold, "sparsify threshold (JSON output)");
  c_enc->add_option("--format", enc.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));

  DecodeArgs dec;
  CLI::App* c_dec = app.add_subcommand("decode-point",
                                       "Recover points from MPP encodings");
  c_dec->add_option("--input", dec.input, "encodings.json or encodings.csv");
  c_dec->add_option("--out", dec.out, "output directory");
  c_dec->add_option("--frame", dec.frame, "frame size: W H (CSV input)")->expected(2);
  c_dec->add_option("--resolution", dec.resolution, "grid spacing (CSV input)");
  c_dec->add_option("--scale", dec.scale, "MPP kernel scale (CSV input)");
  c_dec->add_option("--tolerance", dec.tolerance, "max accepted residual");

  ClusterArgs clu;
  CLI::App* c_clu = app.add_subcommand("cluster", "DBSCAN over encoding vectors");
  c_clu->add_option("--input", clu.input, "encodings.json or encodings.csv");
  c_clu->add_option("--out", clu.out, "output directory");
  c_clu->add_option("--frame", clu.frame, "frame size: W H (CSV input)")->expected(2);
  c_clu->add_option("--resolution", clu.resolution, "grid spacing (CSV input)");
  c_clu->add_option("--eps", clu.eps, "DBSCAN distance threshold");
  c_clu->add_option("--min-pts", clu.min_pts, "DBSCAN core size");

  ContinuityArgs con;
  CLI::App* c_con = app.add_subcommand(
      "continuity", "Encode a point trajectory with both encoders");
  c_con->add_option("--trajectory", con.trajectory, "CSV of x,y steps (default: builtin)");
  c_con->add_option("--out", con.out, "output directory");
  c_con->add_option("--frame", con.frame, "frame size: W H")->expected(2);
  c_con->add_option("--resolution", con.resolution, "grid spacing");
  c_con->add_option("--scale", con.scale, "MPP kernel scale");

  GenCorpusArgs gen;
  CLI::App* c_gen = app.add_subcommand("gen-corpus", "Generate a synthetic corpus");
  c_gen->add_option("--out", gen.out, "output directory");
  c_gen->add_option("--frame", gen.frame, "frame size: W H")->expected(2);
  c_gen->add_option("--lines", gen.lines, "LineString count");
  c_gen->add_option("--polygons", gen.polygons, "Polygon count");
  c_gen->add_option("--points", gen.points, "Point count");
  c_gen->add_option("--seed", gen.seed, "master seed");

  EvalPropertiesArgs evp;
  CLI::App* c_evp = app.add_subcommand(
      "eval-properties", "Probe-model estimation of single-shape properties");
  c_evp->add_option("--out", evp.out, "output directory");
  c_evp->add_option("--corpus", evp.corpus, "GeoJSON corpus (default: generated)");
  c_evp->add_option("--lines", evp.lines, "generated LineString count");
  c_evp->add_option("--polygons", evp.polygons, "generated Polygon count");
  c_evp->add_option("--frame", evp.frame, "frame size: W H")->expected(2);
  c_evp->add_option("--resolutions", evp.resolutions, "grid spacings")
      ->expected(-1);
  c_evp->add_option("--encoders", evp.encoders, "encoders to compare")->expected(-1);
  c_evp->add_option("--scale", evp.scale, "MPP kernel scale (default: spacing)");
  c_evp->add_option("--epochs", evp.epochs, "max training epochs");
  c_evp->add_option("--batch", evp.batch, "batch size");
  c_evp->add_option("--lr", evp.lr, "learning rate");
  c_evp->add_option("--patience", evp.patience, "early-stop patience");
  c_evp->add_option("--threads", evp.threads, "worker threads (0: auto)");
  c_evp->add_option("--seed", evp.seed, "master seed");
  c_evp->add_flag("--orientation-mean-r2", evp.orientation_mean_r2,
                  "average the two orientation R^2 values instead of pooling");

  EvalPairwiseArgs evr;
  CLI::App* c_evr = app.add_subcommand(
      "eval-pairwise", "Probe-model estimation of pairwise relationships");
  c_evr->add_option("--out", evr.out, "output directory");
  c_evr->add_option("--pairs", evr.pairs, "cases per relation (balanced)");
  c_evr->add_option("--relations", evr.relations, "relations to test")->expected(-1);
  c_evr->add_option("--frame", evr.frame, "frame size: W H")->expected(2);
  c_evr->add_option("--resolutions", evr.resolutions, "grid spacings")->expected(-1);
  c_evr->add_option("--encoders", evr.encoders, "encoders to compare")->expected(-1);
  c_evr->add_option("--scale", evr.scale, "MPP kernel scale (default: spacing)");
  c_evr->add_option("--epochs", evr.epochs, "max training epochs");
  c_evr->add_option("--batch", evr.batch, "batch size");
  c_evr->add_option("--lr", evr.lr, "learning rate");
  c_evr->add_option("--patience", evr.patience, "early-stop patience");
  c_evr->add_option("--threads", evr.threads, "worker threads (0: auto)");
  c_evr->add_option("--seed", evr.seed, "master seed");

  try {
    json overlay = load_config_overlay(argc, argv);
    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      return app.exit(e) == 0 ? kOk : kUsage;
    }
    for (CLI::App* sub : {c_enc, c_dec, c_clu, c_con, c_gen, c_evp, c_evr})
      if (sub->parsed()) apply_overlay(sub, overlay);

    if (c_enc->parsed()) return cmd_encode(enc);
    if (c_dec->parsed()) return cmd_decode_point(dec);
    if (c_clu->parsed()) return cmd_cluster(clu);
    if (c_con->parsed()) return cmd_continuity(con);
    if (c_gen->parsed()) return cmd_gen_corpus(gen);
    if (c_evp->parsed()) return cmd_eval_properties(evp);
    if (c_evr->parsed()) return cmd_eval_pairwise(evr);
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::config:
        return kUsage;
      case ErrorCode::internal:
        return kInternal;
      default:
        return kDataError;
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
