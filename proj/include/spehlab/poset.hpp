#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "spehlab/io.hpp"
#include "spehlab/multisegment.hpp"

// The elementary-operation order on multisegments.
//
// An elementary operation replaces a linked pair [S1,S2] by [S1 u S2,
// S1 n S2], dropping the intersection when empty. M <= M' holds when M is
// reached from M' by finitely many such operations; every operation
// strictly decreases, preserves the support, weakly increases maxlength
// and weakly shrinks thickness and the B/E multisets.

namespace spehlab {

/// All results of one elementary operation on M, deduplicated. Every
/// returned multisegment is strictly below M.
inline std::vector<Multisegment> successors_down(const Multisegment& m) {
  const auto& segs = m.segments();
  std::vector<Multisegment> out;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      if (!linked(segs[i], segs[j])) continue;
      std::vector<Segment> next;
      next.reserve(segs.size());
      for (std::size_t k = 0; k < segs.size(); ++k)
        if (k != i && k != j) next.push_back(segs[k]);
      next.push_back(merge(segs[i], segs[j]));
      if (auto inter = intersect(segs[i], segs[j])) next.push_back(*inter);
      out.emplace_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Everything below M (inclusive), in canonical order. Finite because
/// each operation strictly increases the multiset of squared lengths.
inline std::vector<Multisegment> downset(const Multisegment& m) {
  std::unordered_set<Multisegment> seen{m};
  std::deque<Multisegment> queue{m};
  while (!queue.empty()) {
    Multisegment cur = std::move(queue.front());
    queue.pop_front();
    for (Multisegment& next : successors_down(cur)) {
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<Multisegment> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

/// Sum over segments of len*(len+1)/2, i.e. the number of (window,
/// containing segment) pairs. An elementary operation conserves the point
/// count and replaces two lengths by their max-span and overlap, so by
/// strict convexity every operation strictly increases this quantity:
/// it is a strictly monotone energy for the order (hence also a
/// termination and acyclicity certificate for the downward graph).
inline std::int64_t energy(const Multisegment& m) {
  std::int64_t total = 0;
  for (const Segment& s : m.segments()) {
    const std::int64_t len = s.length();
    total = checked_add(total, checked_mul(len, len + 1) / 2);
  }
  return total;
}

/// Decides target <= top within one grid class by descending breadth-first
/// from top. Nodes whose B or E multiset no longer contains the target's
/// (or whose maxlength passed the target's) cannot reach it and are cut.
inline bool leq_single_class(const Multisegment& target, const Multisegment& top) {
  if (target == top) return true;
  const PointMultiset target_b = target.beginnings();
  const PointMultiset target_e = target.endings();
  const std::int64_t target_m = target.maxlength();
  const std::int64_t target_t = target.thickness();
  const std::int64_t target_energy = energy(target);

  // necessary conditions: descending weakly raises maxlength and energy,
  // lowers thickness, and shrinks the B/E multisets
  if (target_m < top.maxlength() || target_t > top.thickness()) return false;
  if (target_energy <= energy(top)) return false;  // equal energy, unequal values
  if (!multiset_includes(top.beginnings(), target_b)) return false;
  if (!multiset_includes(top.endings(), target_e)) return false;

  std::unordered_set<Multisegment> seen{top};
  std::deque<Multisegment> queue{top};
  while (!queue.empty()) {
    Multisegment cur = std::move(queue.front());
    queue.pop_front();
    for (Multisegment& next : successors_down(cur)) {
      if (next == target) return true;
      if (next.thickness() < target_t || next.maxlength() > target_m) continue;
      if (energy(next) >= target_energy) continue;  // already past the target
      if (!multiset_includes(next.beginnings(), target_b)) continue;
      if (!multiset_includes(next.endings(), target_e)) continue;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return false;
}

}  // namespace detail

/// True iff a <= b, i.e. a is reachable from b by elementary operations.
/// Multisegments across several grid classes compare componentwise.
inline bool is_leq(const Multisegment& a, const Multisegment& b) {
  if (a == b) return true;
  auto ca = detail::split_by_grid(a);
  auto cb = detail::split_by_grid(b);
  // Supports must match classwise; elementary operations preserve them.
  if (ca.size() != cb.size()) return false;
  for (auto ita = ca.begin(), itb = cb.begin(); ita != ca.end(); ++ita, ++itb) {
    if (ita->first != itb->first) return false;
    Multisegment part_a(ita->second);
    Multisegment part_b(itb->second);
    if (part_a.support() != part_b.support()) return false;
    if (!detail::leq_single_class(part_a, part_b)) return false;
  }
  return true;
}

namespace detail {

/// Enumerates, within one grid class, every multiset of segments whose
/// points are exactly `pts` (sorted). Recursion picks the canonically
/// first segment: it begins at the leftmost remaining point, and segments
/// sharing that beginning are produced with non-decreasing ends.
inline void enumerate_class(std::vector<Rational>& pts, const std::string& line,
                            std::optional<Rational> min_end_same_begin,
                            std::vector<Segment>& partial,
                            std::vector<std::vector<Segment>>& out) {
  if (pts.empty()) {
    out.push_back(partial);
    return;
  }
  Rational begin = pts.front();
  // Extend the candidate segment point by point while the support allows.
  std::vector<std::size_t> taken;  // indices into pts consumed so far
  taken.push_back(0);
  for (Rational end = begin;; end += Rational(1)) {
    if (end > begin) {
      // locate one unused copy of `end`
      bool found = false;
      for (std::size_t i = taken.back() + 1; i < pts.size(); ++i) {
        if (pts[i] == end && (std::find(taken.begin(), taken.end(), i) == taken.end())) {
          taken.push_back(i);
          found = true;
          break;
        }
        if (pts[i] > end) break;
      }
      if (!found) break;
    }
    if (min_end_same_begin && end < *min_end_same_begin) continue;
    std::vector<Rational> rest;
    rest.reserve(pts.size() - taken.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (std::find(taken.begin(), taken.end(), i) == taken.end()) rest.push_back(pts[i]);
    partial.emplace_back(begin, end, line);
    std::optional<Rational> next_min;
    if (!rest.empty() && rest.front() == begin) next_min = end;
    enumerate_class(rest, line, next_min, partial, out);
    partial.pop_back();
  }
}

}  // namespace detail

/// Every multisegment whose support equals the given point multiset, each
/// exactly once, in canonical order.
inline std::vector<Multisegment> enumerate_with_support(const PointMultiset& points) {
  std::map<detail::GridKey, std::vector<Rational>> classes;
  for (const Point& p : points) classes[{p.line, p.x.frac()}].push_back(p.x);

  std::vector<std::vector<std::vector<Segment>>> per_class;
  for (auto& [key, pts] : classes) {
    std::sort(pts.begin(), pts.end());
    std::vector<std::vector<Segment>> variants;
    std::vector<Segment> partial;
    detail::enumerate_class(pts, key.line, std::nullopt, partial, variants);
    per_class.push_back(std::move(variants));
  }

  std::vector<Multisegment> out;
  std::vector<Segment> combo;
  auto combine = [&](auto&& self, std::size_t idx) -> void {
    if (idx == per_class.size()) {
      out.emplace_back(combo);
      return;
    }
    for (const auto& variant : per_class[idx]) {
      std::size_t mark = combo.size();
      combo.insert(combo.end(), variant.begin(), variant.end());
      self(self, idx + 1);
      combo.resize(mark);
    }
  };
  combine(combine, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Hasse diagram of the order restricted to all multisegments with a given
/// support. Edges run from the larger element to the smaller and are the
/// true covering relations, computed rather than assumed to be single
/// elementary operations.
struct HasseDiagram {
  std::vector<Multisegment> nodes;                    // canonical order
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (larger, smaller)
};

inline HasseDiagram hasse(const PointMultiset& points) {
  HasseDiagram g;
  g.nodes = enumerate_with_support(points);
  std::map<Multisegment, std::size_t> index;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) index[g.nodes[i]] = i;

  const std::size_t n = g.nodes.size();
  std::vector<std::vector<std::size_t>> onestep(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const Multisegment& next : successors_down(g.nodes[i]))
      onestep[i].push_back(index.at(next));

  // strict-descendant sets as packed bit rows, filled depth-first
  // (the one-step graph is acyclic, every step strictly decreases)
  const std::size_t words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> desc(n, std::vector<std::uint64_t>(words, 0));
  std::vector<bool> ready(n, false);
  auto fill = [&](auto&& self, std::size_t u) -> void {
    if (ready[u]) return;
    ready[u] = true;
    for (std::size_t v : onestep[u]) {
      self(self, v);
      desc[u][v / 64] |= std::uint64_t{1} << (v % 64);
      for (std::size_t w = 0; w < words; ++w) desc[u][w] |= desc[v][w];
    }
  };
  for (std::size_t i = 0; i < n; ++i) fill(fill, i);

  // an edge u -> v covers iff no sibling step u -> w already reaches v
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v : onestep[u]) {
      bool covered = false;
      for (std::size_t w : onestep[u]) {
        if (w != v && (desc[w][v / 64] >> (v % 64)) & 1) {
          covered = true;
          break;
        }
      }
      if (!covered) g.edges.emplace_back(u, v);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

inline std::string to_dot(const HasseDiagram& g) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  std::string out = "digraph multisegments {\n";
  for (const Multisegment& node : g.nodes) out += "  " + quote(format(node)) + ";\n";
  for (const auto& [u, v] : g.edges)
    out += "  " + quote(format(g.nodes[u])) + " -> " + quote(format(g.nodes[v])) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace spehlab
