#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "geomenc/encoding.hpp"
#include "geomenc/errors.hpp"
#include "geomenc/grid.hpp"
#include "geomenc/num_format.hpp"

namespace geomenc {

struct EncodedRow {
  std::string id;
  DenseEncoding dense;
};

// CSV form: header "id,v0,...,v{N-1}", one row per geometry, shortest
// round-trip number formatting throughout.
inline std::string encodings_to_csv(const std::vector<EncodedRow>& rows,
                                    std::size_t n) {
  std::string out = "id";
  for (std::size_t j = 0; j < n; ++j) {
    out += ",v";
    out += std::to_string(j);
  }
  out += '\n';
  for (const EncodedRow& r : rows) {
    if (r.dense.size() != n)
      throw_error(ErrorCode::argument, "encoding length mismatch in CSV writer");
    out += r.id;
    for (double v : r.dense.values) {
      out += ',';
      out += format_double(v);
    }
    out += '\n';
  }
  return out;
}

struct EncodingFile {
  Frame frame{0, 0, 1, 1};
  double resolution = 0;
  std::string method;  // "mpp" | "div"
  double s = 0;        // kernel scale when method == "mpp"
  std::optional<double> threshold;
  std::vector<EncodedRow> rows;
};

// JSON form: grid descriptor plus either dense values or the sparse
// index/value representation when a threshold was applied.
inline std::string encodings_to_json(const EncodingFile& file) {
  nlohmann::ordered_json root;
  root["grid"] = {{"frame", {file.frame.min_x, file.frame.min_y, file.frame.max_x,
                             file.frame.max_y}},
                  {"resolution", file.resolution}};
  root["method"] = file.method;
  if (file.method == "mpp") root["s"] = file.s;
  if (file.threshold) root["threshold"] = *file.threshold;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const EncodedRow& r : file.rows) {
    nlohmann::ordered_json row;
    row["id"] = r.id;
    if (file.threshold) {
      SparseEncoding s = sparsify(r.dense, *file.threshold);
      row["length"] = s.length;
      row["indices"] = s.indices;
      row["values"] = s.values;
    } else {
      row["values"] = r.dense.values;
    }
    rows.push_back(std::move(row));
  }
  root["rows"] = std::move(rows);
  return root.dump();
}

inline EncodingFile encodings_from_json(std::string_view text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw_parse(e.byte > 0 ? static_cast<std::size_t>(e.byte - 1) : 0, e.what(),
                "valid JSON");
  }
  try {
    EncodingFile file;
    auto f = root.at("grid").at("frame");
    file.frame = Frame::make(f.at(0), f.at(1), f.at(2), f.at(3));
    file.resolution = root.at("grid").at("resolution");
    file.method = root.value("method", "mpp");
    file.s = root.value("s", file.resolution);
    if (root.contains("threshold")) file.threshold = root["threshold"].get<double>();
    auto [ref, tiles] = make_grids(file.frame, file.resolution);
    for (const auto& row : root.at("rows")) {
      EncodedRow r;
      r.id = row.value("id", "");
      if (row.contains("indices")) {
        SparseEncoding s;
        s.length = row.at("length").get<std::size_t>();
        s.indices = row.at("indices").get<std::vector<std::size_t>>();
        s.values = row.at("values").get<std::vector<double>>();
        s.grid_id = ref.id;
        r.dense = densify(s);
      } else {
        r.dense.values = row.at("values").get<std::vector<double>>();
        r.dense.grid_id = ref.id;
      }
      if (r.dense.size() != static_cast<std::size_t>(ref.size()))
        throw_error(ErrorCode::validation,
                    "row '" + r.id + "' length does not match the grid");
      file.rows.push_back(std::move(r));
    }
    return file;
  } catch (const nlohmann::json::exception& e) {
    throw_error(ErrorCode::parse, std::string("malformed encoding file: ") + e.what());
  }
}

// CSV reader; the grid is supplied externally since CSV carries no metadata.
inline std::vector<EncodedRow> encodings_from_csv(std::string_view text,
                                                  const std::string& grid_id,
                                                  std::size_t expected_n) {
  std::vector<EncodedRow> rows;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line.empty()) continue;
    if (line_no == 1 && line.substr(0, 3) == "id,") continue;  // header
    EncodedRow r;
    std::size_t cell_start = 0;
    bool first = true;
    while (cell_start <= line.size()) {
      std::size_t comma = line.find(',', cell_start);
      if (comma == std::string_view::npos) comma = line.size();
      std::string_view cell = line.substr(cell_start, comma - cell_start);
      if (first) {
        r.id = std::string(cell);
        first = false;
      } else {
        double v;
        if (!parse_double(cell, v))
          throw_error(ErrorCode::parse, "line " + std::to_string(line_no) +
                                            ": malformed value '" +
                                            std::string(cell) + "'");
        r.dense.values.push_back(v);
      }
      cell_start = comma + 1;
      if (comma == line.size()) break;
    }
    if (r.dense.size() != expected_n)
      throw_error(ErrorCode::validation,
                  "line " + std::to_string(line_no) + ": expected " +
                      std::to_string(expected_n) + " values, got " +
                      std::to_string(r.dense.size()));
    r.dense.grid_id = grid_id;
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace geomenc
