#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "spehlab/rational.hpp"

namespace spehlab {

inline const std::string kDefaultLine = "rho";

/// A segment is a nonempty run of consecutive points {b, b+1, ..., e} on a
/// cuspidal line. end - begin must be a non-negative integer.
///
/// Comparison is the canonical container order (line, begin, end); the
/// dominance order on multisegments lives in poset.hpp.
struct Segment {
  std::string line = kDefaultLine;
  Rational begin;
  Rational end;

  Segment() = default;
  Segment(Rational b, Rational e, std::string ln = kDefaultLine)
      : line(std::move(ln)), begin(b), end(e) {
    Rational span = end - begin;
    if (!span.is_integer() || span.num() < 0)
      throw std::invalid_argument("segment bounds must differ by a non-negative integer");
  }

  std::int64_t length() const { return (end - begin).num() + 1; }

  /// Midpoint (b+e)/2, the center of the segment on its line.
  Rational center() const { return (begin + end) / 2; }

  auto operator<=>(const Segment&) const = default;
};

/// Segment with given ending a and length m: {a-m+1, ..., a}.
/// m = 0 yields the unit (no segment).
inline std::optional<Segment> seg_from_end(Rational a, std::int64_t m,
                                           std::string line = kDefaultLine) {
  if (m < 0) throw std::invalid_argument("segment length must be non-negative");
  if (m == 0) return std::nullopt;
  return Segment(a - Rational(m - 1), a, std::move(line));
}

/// Segment with given beginning a and length m: {a, ..., a+m-1}.
inline std::optional<Segment> seg_from_begin(Rational a, std::int64_t m,
                                             std::string line = kDefaultLine) {
  if (m < 0) throw std::invalid_argument("segment length must be non-negative");
  if (m == 0) return std::nullopt;
  return Segment(a, a + Rational(m - 1), std::move(line));
}

/// True iff both segments live on the same line and the same integer
/// lattice. Segments on different grids never interact.
inline bool same_grid(const Segment& s, const Segment& t) {
  return s.line == t.line && (s.begin - t.begin).is_integer();
}

/// Point-set containment. Segments on different grids never contain one
/// another.
inline bool contains(const Segment& outer, const Segment& inner) {
  return same_grid(outer, inner) && outer.begin <= inner.begin && inner.end <= outer.end;
}

/// Two segments are linked iff neither contains the other and their union
/// is again a segment (they overlap or are adjacent, with no gap).
inline bool linked(const Segment& s, const Segment& t) {
  if (!same_grid(s, t)) return false;
  if (contains(s, t) || contains(t, s)) return false;
  return std::max(s.begin, t.begin) <= std::min(s.end, t.end) + Rational(1);
}

/// Union of two linked (or overlapping) segments as a single segment.
inline Segment merge(const Segment& s, const Segment& t) {
  return Segment(std::min(s.begin, t.begin), std::max(s.end, t.end), s.line);
}

/// Intersection; empty intersections come back as nullopt.
inline std::optional<Segment> intersect(const Segment& s, const Segment& t) {
  if (!same_grid(s, t)) return std::nullopt;
  Rational b = std::max(s.begin, t.begin);
  Rational e = std::min(s.end, t.end);
  if (b > e) return std::nullopt;
  return Segment(b, e, s.line);
}

}  // namespace spehlab
