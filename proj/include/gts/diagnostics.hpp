#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gts {

// 1-based source position; {0,0} means "no span" (synthesized nodes).
// Spans are diagnostic payload only and never take part in equality.
struct Span {
  std::uint32_t line = 0;
  std::uint32_t col = 0;

  bool known() const { return line != 0; }
  std::string str() const {
    return known() ? std::to_string(line) + ":" + std::to_string(col)
                   : std::string("<synthesized>");
  }
};

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lexer/parser failure: message carries line:col and the expected-token set.
struct parse_error : error {
  parse_error(const Span& s, const std::string& msg)
      : error(s.str() + ": syntax error: " + msg), span(s) {}
  Span span;
};

// Surface type system rejection: names the failing rule and both types.
struct type_error : error {
  type_error(const Span& s, const std::string& rule, const std::string& msg)
      : error(s.str() + ": type error [" + rule + "]: " + msg), span(s) {}
  Span span;
};

// Shallow (tag-level) validator rejection; indicates a check-inserter bug.
struct shallow_error : error {
  using error::error;
};

// Broken internal contract (solver/optimizer invariant); CLI exits 2.
struct internal_error : error {
  using error::error;
};

}  // namespace gts
