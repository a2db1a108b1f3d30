#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "geomenc/errors.hpp"
#include "geomenc/geometry.hpp"
#include "geomenc/num_format.hpp"

namespace geomenc {

namespace detail {

class WktParser {
 public:
  explicit WktParser(std::string_view text) : text_(text) {}

  Geometry parse() {
    skip_ws();
    std::string kw = keyword();
    Geometry g = parse_body(kw);
    skip_ws();
    if (pos_ != text_.size())
      throw_parse(pos_, "trailing characters after geometry", "end of input");
    return g;
  }

 private:
  Geometry parse_body(const std::string& kw) {
    if (kw == "POINT") {
      auto c = coord_list_single();
      return Geometry::point(c);
    }
    if (kw == "LINESTRING") return Geometry::line_string(coord_list());
    if (kw == "POLYGON") return Geometry::polygon_from_rings(rings());
    if (kw == "MULTIPOINT") return Geometry::multi_point(multipoint_coords());
    if (kw == "MULTILINESTRING") {
      expect('(');
      std::vector<std::vector<Point2>> parts;
      parts.push_back(coord_list());
      while (comma()) parts.push_back(coord_list());
      expect(')');
      return Geometry::multi_line_string(std::move(parts));
    }
    if (kw == "MULTIPOLYGON") {
      expect('(');
      std::vector<PolygonData> parts;
      parts.push_back(Geometry::rings_to_polygon_data(rings()));
      while (comma()) parts.push_back(Geometry::rings_to_polygon_data(rings()));
      expect(')');
      return Geometry::multi_polygon(std::move(parts));
    }
    if (kw == "GEOMETRYCOLLECTION")
      throw_error(ErrorCode::unsupported, "GEOMETRYCOLLECTION is not supported");
    throw_parse(kw_pos_, "unknown geometry type '" + kw + "'",
                "POINT, LINESTRING, POLYGON or a MULTI* variant");
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::string keyword() {
    skip_ws();
    kw_pos_ = pos_;
    std::string kw;
    while (pos_ < text_.size() &&
           std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      kw += static_cast<char>(
          std::toupper(static_cast<unsigned char>(text_[pos_])));
      ++pos_;
    }
    if (kw.empty()) throw_parse(pos_, "missing geometry type", "keyword");
    reject_empty();
    return kw;
  }

  void reject_empty() {
    std::size_t save = pos_;
    skip_ws();
    std::size_t at = pos_;
    std::string next;
    while (pos_ < text_.size() &&
           std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      next += static_cast<char>(
          std::toupper(static_cast<unsigned char>(text_[pos_])));
      ++pos_;
    }
    if (next == "EMPTY")
      throw_parse(at, "EMPTY geometries are not supported", "coordinate list");
    pos_ = save;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw_parse(pos_, "unexpected character", std::string("'") + c + "'");
    ++pos_;
  }

  bool comma() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      return true;
    }
    return false;
  }

  double number() {
    skip_ws();
    double v;
    if (!parse_double_prefix(text_, pos_, v))
      throw_parse(pos_, "malformed number", "numeric literal");
    return v;
  }

  Point2 coord() {
    double x = number();
    double y = number();
    return {x, y};
  }

  Point2 coord_list_single() {
    expect('(');
    Point2 p = coord();
    expect(')');
    return p;
  }

  std::vector<Point2> coord_list() {
    expect('(');
    std::vector<Point2> v;
    v.push_back(coord());
    while (comma()) v.push_back(coord());
    expect(')');
    return v;
  }

  // MULTIPOINT accepts both ((1 2), (3 4)) and (1 2, 3 4).
  std::vector<Point2> multipoint_coords() {
    expect('(');
    std::vector<Point2> v;
    auto one = [&]() {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '(') {
        ++pos_;
        Point2 p = coord();
        expect(')');
        v.push_back(p);
      } else {
        v.push_back(coord());
      }
    };
    one();
    while (comma()) one();
    expect(')');
    return v;
  }

  std::vector<Ring> rings() {
    expect('(');
    std::vector<Ring> rs;
    rs.push_back(coord_list());
    while (comma()) rs.push_back(coord_list());
    expect(')');
    return rs;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t kw_pos_ = 0;
};

}  // namespace detail

inline Geometry parse_wkt(std::string_view text) {
  return detail::WktParser(text).parse();
}

namespace detail {

inline void write_coord(std::string& out, Point2 p) {
  out += format_double(p.x);
  out += ' ';
  out += format_double(p.y);
}

inline void write_coord_list(std::string& out, const std::vector<Point2>& v) {
  out += '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    write_coord(out, v[i]);
  }
  out += ')';
}

inline void write_rings(std::string& out, const PolygonData& pd) {
  out += '(';
  write_coord_list(out, pd.exterior);
  for (const Ring& h : pd.holes) {
    out += ", ";
    write_coord_list(out, h);
  }
  out += ')';
}

}  // namespace detail

inline std::string write_wkt(const Geometry& g) {
  std::string out;
  switch (g.kind()) {
    case GeometryKind::point: {
      out = "POINT (";
      detail::write_coord(out, g.as_point());
      out += ')';
      break;
    }
    case GeometryKind::line_string:
      out = "LINESTRING ";
      detail::write_coord_list(out, g.line_vertices());
      break;
    case GeometryKind::polygon:
      out = "POLYGON ";
      detail::write_rings(out, g.polygon_data());
      break;
    case GeometryKind::multi_point: {
      out = "MULTIPOINT (";
      const auto& pts = g.multi_points();
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out += ", ";
        out += '(';
        detail::write_coord(out, pts[i]);
        out += ')';
      }
      out += ')';
      break;
    }
    case GeometryKind::multi_line_string: {
      out = "MULTILINESTRING (";
      const auto& parts = g.line_parts();
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ", ";
        detail::write_coord_list(out, parts[i]);
      }
      out += ')';
      break;
    }
    case GeometryKind::multi_polygon: {
      out = "MULTIPOLYGON (";
      const auto& parts = g.polygon_parts();
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ", ";
        detail::write_rings(out, parts[i]);
      }
      out += ')';
      break;
    }
  }
  return out;
}

}  // namespace geomenc
