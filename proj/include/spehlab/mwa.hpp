#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spehlab/multisegment.hpp"

// The extraction algorithm computing the dual multisegment M^#.
//
// Per round, within one (line, coset) class: let e be the greatest ending.
// Chain delta_0 = a shortest segment ending at e, then delta_{j+1} = a
// shortest segment ending one point earlier than delta_j and not included
// in it, until no such segment exists. The chain's endings e, e-1, ...,
// e-r form one segment of the dual; each delta_j loses its ending point
// (and is dropped when that empties it). Rounds repeat until the class is
// exhausted. Applying the procedure twice gives back the input.

namespace spehlab {

/// Picks one of several equal candidate segments (the shortest eligible
/// ones for the current chain slot, in canonical order). Only the choice
/// of stored copy is at stake; the dual is invariant under it, which the
/// verification suites confirm empirically.
using TieBreaker = std::function<std::size_t(const std::vector<Segment>&)>;

/// Default policy: the earliest candidate in canonical order.
inline TieBreaker first_choice() {
  return [](const std::vector<Segment>&) -> std::size_t { return 0; };
}

/// Seeded uniformly random policy, for independence checks.
inline TieBreaker random_tie_break(std::uint64_t seed) {
  return [rng = std::mt19937_64(seed)](const std::vector<Segment>& c) mutable {
    return std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng);
  };
}

/// One extraction round: the dual segment it produced and the chain
/// segments it consumed (as they were stored when consumed).
struct ExtractionRound {
  Segment produced;
  std::vector<Segment> consumed;
};

namespace detail {

/// Runs the extraction to exhaustion on one grid class.
inline void extract_class(std::vector<Segment> work, const TieBreaker& choose,
                          std::vector<ExtractionRound>& rounds) {
  while (!work.empty()) {
    std::sort(work.begin(), work.end());
    Rational e = work.front().end;
    for (const Segment& s : work) e = std::max(e, s.end);

    std::vector<std::size_t> chain;
    Rational target = e;
    std::optional<Rational> prev_begin;  // chain segments must step left
    for (;;) {
      // eligible: ends at target, not included in the previous chain
      // segment (i.e. begins strictly before it); ties are the shortest
      std::vector<std::size_t> shortest;
      for (std::size_t i = 0; i < work.size(); ++i) {
        if (work[i].end != target) continue;
        if (prev_begin && work[i].begin >= *prev_begin) continue;
        if (!shortest.empty()) {
          const Rational best = work[shortest.front()].begin;
          if (work[i].begin > best) shortest.clear();  // strictly shorter
          else if (work[i].begin < best) continue;
        }
        shortest.push_back(i);
      }
      if (shortest.empty()) break;

      std::vector<Segment> candidates;
      candidates.reserve(shortest.size());
      for (std::size_t i : shortest) candidates.push_back(work[i]);
      std::size_t pick = choose(candidates);
      if (pick >= shortest.size())
        throw std::out_of_range("tie-break policy chose a nonexistent candidate");

      chain.push_back(shortest[pick]);
      prev_begin = work[chain.back()].begin;
      target -= Rational(1);
    }

    ExtractionRound round;
    round.produced = Segment(target + Rational(1), e, work.front().line);
    for (std::size_t i : chain) round.consumed.push_back(work[i]);  // delta_0 first
    std::vector<Segment> next;
    next.reserve(work.size());
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (std::find(chain.begin(), chain.end(), i) != chain.end()) {
        if (work[i].length() > 1)
          next.emplace_back(work[i].begin, work[i].end - Rational(1), work[i].line);
      } else {
        next.push_back(work[i]);
      }
    }
    rounds.push_back(std::move(round));
    work = std::move(next);
  }
}

}  // namespace detail

/// Full extraction log under the given tie-break policy, grouped by grid
/// class in canonical class order.
inline std::vector<ExtractionRound> mwa_trace(const Multisegment& m,
                                              const TieBreaker& choose) {
  std::vector<ExtractionRound> rounds;
  for (auto& [key, segs] : detail::split_by_grid(m))
    detail::extract_class(std::move(segs), choose, rounds);
  return rounds;
}

inline std::vector<ExtractionRound> mwa_trace(const Multisegment& m) {
  return mwa_trace(m, first_choice());
}

/// The dual multisegment under a caller-supplied tie-break policy.
inline Multisegment mwa_dual_with_choices(const Multisegment& m, const TieBreaker& choose) {
  std::vector<Segment> produced;
  for (const ExtractionRound& r : mwa_trace(m, choose)) produced.push_back(r.produced);
  return Multisegment(std::move(produced));
}

/// The dual multisegment M^# under the default (deterministic) policy.
inline Multisegment mwa_dual(const Multisegment& m) {
  return mwa_dual_with_choices(m, first_choice());
}

/// Property (P): when E(M) fits inside a single segment of length k, the
/// dual has no segment longer than k. Throws when the precondition fails
/// (so a violated hypothesis is never conflated with a failed property).
inline bool check_P(const Multisegment& m, std::int64_t k) {
  const PointMultiset ends = m.endings();
  if (!ends.empty()) {
    const Point& first = ends.front();
    for (const Point& p : ends)
      if (p.line != first.line || !(p.x - first.x).is_integer())
        throw std::invalid_argument("E(M) does not fit inside one segment");
    const Rational span = ends.back().x - first.x;  // endings are sorted
    if (span.num() + 1 > k)
      throw std::invalid_argument("E(M) does not fit inside a segment of length k");
  }
  return mwa_dual(m).maxlength() <= k;
}

/// Property (P'): the dual's maxlength never exceeds the thickness,
/// m(M^#) <= t(M).
inline bool check_P_prime(const Multisegment& m) {
  return mwa_dual(m).maxlength() <= m.thickness();
}

/// Instrumented check that while a class's greatest ending is still the
/// original e, every produced dual segment is built exclusively from
/// points of E(M).
inline bool endings_only_holds(const Multisegment& m) {
  std::map<detail::GridKey, std::pair<std::set<Rational>, Rational>> classes;
  for (const Segment& s : m.segments()) {
    auto [it, fresh] = classes.try_emplace(detail::grid_key(s),
                                           std::set<Rational>{}, s.end);
    it->second.first.insert(s.end);
    it->second.second = std::max(it->second.second, s.end);
  }
  for (const ExtractionRound& r : mwa_trace(m)) {
    const auto& [ends, original_e] = classes.at(detail::grid_key(r.produced));
    if (r.produced.end != original_e) continue;  // later rounds are exempt
    for (Rational x = r.produced.begin; x <= r.produced.end; x += Rational(1))
      if (!ends.count(x)) return false;
  }
  return true;
}

}  // namespace spehlab
