#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "geomenc/errors.hpp"
#include "geomenc/geometry.hpp"

namespace geomenc {

// Parsed feature. Property values are kept as opaque compact JSON text so
// arbitrary members survive a round trip unchanged.
struct FeatureItem {
  Geometry geometry;
  std::map<std::string, std::string> properties;
  bool dropped_extra_dims = false;  // 3rd+ coordinate components were ignored
  bool auto_closed_ring = false;    // an open ring was closed with a warning
};

namespace detail {

using json = nlohmann::json;

struct GeoJsonWarnings {
  bool dropped_extra_dims = false;
  bool auto_closed_ring = false;
};

inline Point2 parse_position(const json& j, GeoJsonWarnings& w,
                             const std::string& where) {
  if (!j.is_array() || j.size() < 2)
    throw_error(ErrorCode::parse, where + ": position must be an array of >= 2 numbers");
  if (!j[0].is_number() || !j[1].is_number())
    throw_error(ErrorCode::parse, where + ": position components must be numbers");
  if (j.size() > 2) w.dropped_extra_dims = true;
  return {j[0].get<double>(), j[1].get<double>()};
}

inline std::vector<Point2> parse_positions(const json& j, GeoJsonWarnings& w,
                                           const std::string& where) {
  if (!j.is_array())
    throw_error(ErrorCode::parse, where + ": expected an array of positions");
  std::vector<Point2> v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(parse_position(e, w, where));
  return v;
}

// Open rings are closed with a warning; WKT stays strict on this point.
inline Ring parse_ring(const json& j, GeoJsonWarnings& w, const std::string& where) {
  Ring r = parse_positions(j, w, where);
  if (!r.empty() && !(r.front() == r.back())) {
    r.push_back(r.front());
    w.auto_closed_ring = true;
  }
  return r;
}

inline PolygonData parse_polygon_coords(const json& j, GeoJsonWarnings& w,
                                        const std::string& where) {
  if (!j.is_array() || j.empty())
    throw_error(ErrorCode::parse, where + ": Polygon needs >= 1 ring");
  PolygonData pd;
  pd.exterior = parse_ring(j[0], w, where);
  for (std::size_t i = 1; i < j.size(); ++i)
    pd.holes.push_back(parse_ring(j[i], w, where));
  return pd;
}

inline Geometry parse_geometry_object(const json& j, GeoJsonWarnings& w,
                                      const std::string& where) {
  if (!j.is_object())
    throw_error(ErrorCode::parse, where + ": geometry must be a JSON object");
  std::string type = j.value("type", "");
  if (type == "GeometryCollection")
    throw_error(ErrorCode::unsupported, where + ": GeometryCollection is not supported");
  if (!j.contains("coordinates"))
    throw_error(ErrorCode::parse, where + ": geometry has no coordinates");
  const json& c = j["coordinates"];
  if (type == "Point") return Geometry::point(parse_position(c, w, where));
  if (type == "MultiPoint") return Geometry::multi_point(parse_positions(c, w, where));
  if (type == "LineString") return Geometry::line_string(parse_positions(c, w, where));
  if (type == "MultiLineString") {
    if (!c.is_array())
      throw_error(ErrorCode::parse, where + ": MultiLineString coordinates must be an array");
    std::vector<std::vector<Point2>> parts;
    for (const auto& e : c) parts.push_back(parse_positions(e, w, where));
    return Geometry::multi_line_string(std::move(parts));
  }
  if (type == "Polygon") {
    PolygonData pd = parse_polygon_coords(c, w, where);
    return Geometry::polygon(std::move(pd.exterior), std::move(pd.holes));
  }
  if (type == "MultiPolygon") {
    if (!c.is_array())
      throw_error(ErrorCode::parse, where + ": MultiPolygon coordinates must be an array");
    std::vector<PolygonData> parts;
    for (const auto& e : c) parts.push_back(parse_polygon_coords(e, w, where));
    return Geometry::multi_polygon(std::move(parts));
  }
  throw_error(ErrorCode::unsupported,
              where + ": unsupported geometry type '" + type + "'");
}

inline std::map<std::string, std::string> parse_properties(const json& j) {
  std::map<std::string, std::string> props;
  if (j.is_object())
    for (auto it = j.begin(); it != j.end(); ++it)
      props[it.key()] = it.value().dump();
  return props;
}

// Validation failures from the geometry factories gain the feature index.
inline Geometry parse_geometry_checked(const json& j, GeoJsonWarnings& w,
                                       const std::string& where) {
  try {
    return parse_geometry_object(j, w, where);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::validation)
      throw_error(ErrorCode::validation, where + ": " + e.what());
    throw;
  }
}

inline FeatureItem parse_feature(const json& j, const std::string& where) {
  GeoJsonWarnings w;
  if (!j.contains("geometry"))
    throw_error(ErrorCode::parse, where + ": Feature has no geometry");
  Geometry g = parse_geometry_checked(j["geometry"], w, where);
  FeatureItem item{std::move(g), {}, w.dropped_extra_dims, w.auto_closed_ring};
  if (j.contains("properties")) item.properties = parse_properties(j["properties"]);
  return item;
}

inline json geometry_to_json(const Geometry& g) {
  auto pos = [](Point2 p) { return json::array({p.x, p.y}); };
  auto pos_list = [&](const std::vector<Point2>& v) {
    json a = json::array();
    for (Point2 p : v) a.push_back(pos(p));
    return a;
  };
  auto poly_coords = [&](const PolygonData& pd) {
    json a = json::array();
    a.push_back(pos_list(pd.exterior));
    for (const Ring& h : pd.holes) a.push_back(pos_list(h));
    return a;
  };
  json j;
  j["type"] = to_string(g.kind());
  switch (g.kind()) {
    case GeometryKind::point: j["coordinates"] = pos(g.as_point()); break;
    case GeometryKind::multi_point: j["coordinates"] = pos_list(g.multi_points()); break;
    case GeometryKind::line_string: j["coordinates"] = pos_list(g.line_vertices()); break;
    case GeometryKind::multi_line_string: {
      json a = json::array();
      for (const auto& part : g.line_parts()) a.push_back(pos_list(part));
      j["coordinates"] = std::move(a);
      break;
    }
    case GeometryKind::polygon: j["coordinates"] = poly_coords(g.polygon_data()); break;
    case GeometryKind::multi_polygon: {
      json a = json::array();
      for (const auto& pd : g.polygon_parts()) a.push_back(poly_coords(pd));
      j["coordinates"] = std::move(a);
      break;
    }
  }
  return j;
}

}  // namespace detail

// Accepts a bare geometry object, a Feature, or a FeatureCollection.
// Validation failures identify the offending feature index.
inline std::vector<FeatureItem> parse_geojson(std::string_view text) {
  detail::json root;
  try {
    root = detail::json::parse(text);
  } catch (const detail::json::parse_error& e) {
    throw_parse(e.byte > 0 ? static_cast<std::size_t>(e.byte - 1) : 0, e.what(),
                "valid JSON");
  }
  try {
    std::vector<FeatureItem> items;
    if (root.is_object() && root.value("type", "") == "FeatureCollection") {
      if (!root.contains("features") || !root["features"].is_array())
        throw_error(ErrorCode::parse, "FeatureCollection has no features array");
      std::size_t idx = 0;
      for (const auto& f : root["features"]) {
        items.push_back(detail::parse_feature(f, "feature " + std::to_string(idx)));
        ++idx;
      }
      return items;
    }
    if (root.is_object() && root.value("type", "") == "Feature") {
      items.push_back(detail::parse_feature(root, "feature 0"));
      return items;
    }
    detail::GeoJsonWarnings w;
    Geometry g = detail::parse_geometry_checked(root, w, "feature 0");
    items.push_back(
        FeatureItem{std::move(g), {}, w.dropped_extra_dims, w.auto_closed_ring});
    return items;
  } catch (const detail::json::exception& e) {
    throw_error(ErrorCode::parse, std::string("malformed GeoJSON: ") + e.what());
  }
}

// Serializes as a FeatureCollection; property values are rehydrated from
// their stored JSON text, so numbers stay numbers.
inline std::string write_geojson(const std::vector<FeatureItem>& items) {
  detail::json features = detail::json::array();
  for (const FeatureItem& item : items) {
    detail::json props = detail::json::object();
    for (const auto& [k, v] : item.properties) {
      try {
        props[k] = detail::json::parse(v);
      } catch (const detail::json::parse_error&) {
        props[k] = v;  // plain string that never was JSON
      }
    }
    features.push_back({{"type", "Feature"},
                        {"geometry", detail::geometry_to_json(item.geometry)},
                        {"properties", std::move(props)}});
  }
  detail::json root{{"type", "FeatureCollection"}, {"features", std::move(features)}};
  return root.dump();
}

}  // namespace geomenc
