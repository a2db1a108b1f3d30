#pragma once

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>

namespace geomenc {

// Shortest decimal form that parses back to the same double. Keeps text
// output diff-stable across runs.
inline std::string format_double(double v) {
  char buf[40];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

inline bool parse_double(std::string_view s, double& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto r = std::from_chars(first, last, out);
  return r.ec == std::errc() && r.ptr == last;
}

// Parses a double starting at s[pos]; advances pos past the number.
// Returns false without advancing when no number is present.
inline bool parse_double_prefix(std::string_view s, std::size_t& pos, double& out) {
  const char* first = s.data() + pos;
  const char* last = s.data() + s.size();
  auto r = std::from_chars(first, last, out);
  if (r.ec != std::errc()) return false;
  pos += static_cast<std::size_t>(r.ptr - first);
  return true;
}

}  // namespace geomenc
