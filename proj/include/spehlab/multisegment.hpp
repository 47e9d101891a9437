#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <iterator>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spehlab/segment.hpp"

namespace spehlab {

/// A lattice point on a cuspidal line.
struct Point {
  std::string line = kDefaultLine;
  Rational x;

  auto operator<=>(const Point&) const = default;
};

/// Sorted multiset of points (duplicates are meaningful).
using PointMultiset = std::vector<Point>;

/// Multiset inclusion of sorted point lists.
inline bool multiset_includes(const PointMultiset& big, const PointMultiset& sub) {
  return std::includes(big.begin(), big.end(), sub.begin(), sub.end());
}

/// A finite multiset of segments in canonical (sorted) order. The empty
/// multisegment is the monomial 1 and is a first-class value.
class Multisegment {
 public:
  Multisegment() = default;
  explicit Multisegment(std::vector<Segment> segs) : segs_(std::move(segs)) {
    std::sort(segs_.begin(), segs_.end());
  }

  const std::vector<Segment>& segments() const { return segs_; }
  bool empty() const { return segs_.empty(); }
  std::size_t size() const { return segs_.size(); }

  /// m(M): length of the longest segment, 0 for the empty multisegment.
  std::int64_t maxlength() const {
    std::int64_t m = 0;
    for (const Segment& s : segs_) m = std::max(m, s.length());
    return m;
  }

  /// t(M): the number of segments.
  std::int64_t thickness() const { return static_cast<std::int64_t>(segs_.size()); }

  /// B(M): multiset of beginnings.
  PointMultiset beginnings() const {
    PointMultiset b;
    b.reserve(segs_.size());
    for (const Segment& s : segs_) b.push_back({s.line, s.begin});
    std::sort(b.begin(), b.end());
    return b;
  }

  /// E(M): multiset of endings.
  PointMultiset endings() const {
    PointMultiset e;
    e.reserve(segs_.size());
    for (const Segment& s : segs_) e.push_back({s.line, s.end});
    std::sort(e.begin(), e.end());
    return e;
  }

  /// Multiset union of all segments' points.
  PointMultiset support() const {
    PointMultiset p;
    for (const Segment& s : segs_) {
      Rational x = s.begin;
      for (std::int64_t i = 0; i < s.length(); ++i) {
        p.push_back({s.line, x});
        x += Rational(1);
      }
    }
    std::sort(p.begin(), p.end());
    return p;
  }

  auto operator<=>(const Multisegment&) const = default;

 private:
  std::vector<Segment> segs_;
};

/// Multiset union; the monomial product of the standard basis.
inline Multisegment operator+(const Multisegment& a, const Multisegment& b) {
  std::vector<Segment> segs;
  segs.reserve(a.size() + b.size());
  std::merge(a.segments().begin(), a.segments().end(), b.segments().begin(),
             b.segments().end(), std::back_inserter(segs));
  return Multisegment(std::move(segs));
}

namespace detail {

/// Key of a (line, integer-coset) class. Segments in different classes
/// never interact: they are never linked and never feed the same
/// extraction chain, so most questions factor over these classes.
struct GridKey {
  std::string line;
  Rational offset;  // begin mod 1

  auto operator<=>(const GridKey&) const = default;
};

inline GridKey grid_key(const Segment& s) { return {s.line, s.begin.frac()}; }

inline std::map<GridKey, std::vector<Segment>> split_by_grid(const Multisegment& m) {
  std::map<GridKey, std::vector<Segment>> classes;
  for (const Segment& s : m.segments()) classes[grid_key(s)].push_back(s);
  return classes;
}

inline void hash_mix(std::size_t& h, std::size_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
}

}  // namespace detail

}  // namespace spehlab

template <>
struct std::hash<spehlab::Multisegment> {
  std::size_t operator()(const spehlab::Multisegment& m) const noexcept {
    std::size_t h = m.size();
    for (const spehlab::Segment& s : m.segments()) {
      spehlab::detail::hash_mix(h, std::hash<std::string>{}(s.line));
      spehlab::detail::hash_mix(h, static_cast<std::size_t>(s.begin.num()));
      spehlab::detail::hash_mix(h, static_cast<std::size_t>(s.begin.den()));
      spehlab::detail::hash_mix(h, static_cast<std::size_t>(s.end.num()));
      spehlab::detail::hash_mix(h, static_cast<std::size_t>(s.end.den()));
    }
    return h;
  }
};
