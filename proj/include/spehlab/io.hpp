#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "spehlab/multisegment.hpp"

// Canonical text and JSON forms.
//
// Text grammar:
//   multisegment := '1' | seg ('+' seg)*
//   seg          := [label ':'] '(' rational '..' rational ')'
//   rational     := ['-'] digits ['/' digits]
//   points       := point (',' point)*
//   point        := [label ':'] rational
//
// The formatter emits segments in canonical order, rationals in lowest
// terms, and omits the label when it is the default line "rho"; parsing a
// formatted value reproduces it bit-exactly.

namespace spehlab {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t pos, const std::string& what)
      : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what),
        position_(pos) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

inline std::string format(const Rational& r) { return r.to_string(); }

inline std::string format(const Segment& s) {
  std::string out;
  if (s.line != kDefaultLine) out += s.line + ":";
  out += "(" + s.begin.to_string() + ".." + s.end.to_string() + ")";
  return out;
}

inline std::string format(const Multisegment& m) {
  if (m.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i > 0) out += "+";
    out += format(m.segments()[i]);
  }
  return out;
}

inline std::string format(const PointMultiset& pts) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i > 0) out += ",";
    if (pts[i].line != kDefaultLine) out += pts[i].line + ":";
    out += pts[i].x.to_string();
  }
  return out;
}

namespace detail {

/// Single-pass cursor over the input; all parse entry points share it.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool try_consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!try_consume(c)) throw ParseError(pos_, std::string("expected ") + what);
  }

  /// Literal in the immediately following characters, no whitespace skip.
  bool lookahead(std::string_view lit) const { return text_.substr(pos_, lit.size()) == lit; }

  std::int64_t parse_int() {
    std::size_t start = pos_;
    bool neg = try_consume('-');
    if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError(pos_, "expected a number");
    std::int64_t v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = checked_add(checked_mul(v, 10), text_[pos_] - '0');
      ++pos_;
    }
    (void)start;
    return neg ? checked_neg(v) : v;
  }

  Rational parse_rational() {
    std::int64_t n = parse_int();
    if (try_consume('/')) {
      std::size_t dpos = pos_;
      std::int64_t d = parse_int();
      if (d <= 0) throw ParseError(dpos, "denominator must be positive");
      return Rational(n, d);
    }
    return Rational(n);
  }

  /// Optional `label:` prefix; empty string means the default line.
  std::string parse_line_prefix() {
    std::size_t start = pos_;
    if (done() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
      return {};
    std::size_t p = pos_;
    while (p < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[p])) || text_[p] == '_'))
      ++p;
    if (p < text_.size() && text_[p] == ':') {
      std::string label(text_.substr(pos_, p - pos_));
      pos_ = p + 1;
      return label;
    }
    pos_ = start;
    return {};
  }

  Segment parse_segment() {
    std::string line = parse_line_prefix();
    if (line.empty()) line = kDefaultLine;
    std::size_t open = pos_;
    expect('(', "'('");
    skip_ws();
    Rational b = parse_rational();
    skip_ws();
    if (!lookahead("..")) throw ParseError(pos_, "expected '..'");
    pos_ += 2;
    skip_ws();
    Rational e = parse_rational();
    skip_ws();
    expect(')', "')'");
    try {
      return Segment(b, e, std::move(line));
    } catch (const std::invalid_argument& ex) {
      throw ParseError(open, ex.what());
    }
  }

  /// A multisegment token: '1' or '+'-joined segments. Inside a ring
  /// element, a '+' only continues the monomial when a segment follows
  /// immediately (no whitespace).
  Multisegment parse_multisegment() {
    skip_ws();
    if (peek() == '1') {
      ++pos_;
      return Multisegment();
    }
    std::vector<Segment> segs;
    segs.push_back(parse_segment());
    while (peek() == '+' && pos_ + 1 < text_.size() &&
           (text_[pos_ + 1] == '(' || std::isalpha(static_cast<unsigned char>(text_[pos_ + 1])) ||
            text_[pos_ + 1] == '_')) {
      ++pos_;
      segs.push_back(parse_segment());
    }
    return Multisegment(std::move(segs));
  }

  void expect_end() {
    skip_ws();
    if (!done()) throw ParseError(pos_, "unexpected trailing input");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Rational parse_rational(std::string_view text) {
  detail::Scanner sc(text);
  sc.skip_ws();
  Rational r = sc.parse_rational();
  sc.expect_end();
  return r;
}

inline Multisegment parse_multisegment(std::string_view text) {
  detail::Scanner sc(text);
  Multisegment m = sc.parse_multisegment();
  sc.expect_end();
  return m;
}

inline PointMultiset parse_points(std::string_view text) {
  detail::Scanner sc(text);
  PointMultiset pts;
  sc.skip_ws();
  if (sc.done()) return pts;
  for (;;) {
    sc.skip_ws();
    std::string line = sc.parse_line_prefix();
    if (line.empty()) line = kDefaultLine;
    Rational x = sc.parse_rational();
    pts.push_back({std::move(line), x});
    sc.skip_ws();
    if (!sc.try_consume(',')) break;
  }
  sc.expect_end();
  std::sort(pts.begin(), pts.end());
  return pts;
}

inline nlohmann::json to_json(const Multisegment& m) {
  nlohmann::json segs = nlohmann::json::array();
  for (const Segment& s : m.segments())
    segs.push_back({{"line", s.line}, {"b", s.begin.to_string()}, {"e", s.end.to_string()}});
  return {{"segments", std::move(segs)}};
}

inline Multisegment multisegment_from_json(const nlohmann::json& j) {
  std::vector<Segment> segs;
  for (const auto& js : j.at("segments")) {
    segs.emplace_back(parse_rational(js.at("b").get<std::string>()),
                      parse_rational(js.at("e").get<std::string>()),
                      js.value("line", kDefaultLine));
  }
  return Multisegment(std::move(segs));
}

}  // namespace spehlab
