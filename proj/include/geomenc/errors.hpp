#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace geomenc {

enum class ErrorCode {
  parse,
  unsupported,
  validation,
  argument,
  domain,
  config,
  training,
  generator,
  io,
  internal,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::parse: return "parse";
    case ErrorCode::unsupported: return "unsupported";
    case ErrorCode::validation: return "validation";
    case ErrorCode::argument: return "argument";
    case ErrorCode::domain: return "domain";
    case ErrorCode::config: return "config";
    case ErrorCode::training: return "training";
    case ErrorCode::generator: return "generator";
    case ErrorCode::io: return "io";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Location-carrying description of a text parse failure.
struct ParseError {
  std::size_t byte_offset = 0;
  std::string message;
  std::string expected;
};

class ParseException : public Error {
 public:
  explicit ParseException(ParseError info)
      : Error(ErrorCode::parse, render(info)), info_(std::move(info)) {}
  const ParseError& info() const noexcept { return info_; }

 private:
  static std::string render(const ParseError& e) {
    std::string s = e.message + " at byte " + std::to_string(e.byte_offset);
    if (!e.expected.empty()) s += " (expected " + e.expected + ")";
    return s;
  }
  ParseError info_;
};

[[noreturn]] inline void throw_parse(std::size_t offset, std::string message,
                                     std::string expected = {}) {
  throw ParseException(ParseError{offset, std::move(message), std::move(expected)});
}

[[noreturn]] inline void throw_error(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace geomenc
