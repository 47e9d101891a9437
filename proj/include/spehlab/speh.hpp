#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spehlab/io.hpp"
#include "spehlab/mwa.hpp"
#include "spehlab/multisegment.hpp"
#include "spehlab/poset.hpp"
#include "spehlab/report.hpp"
#include "spehlab/ring.hpp"

// Rectangle multisegments, the determinantal character candidate F(l,k),
// the Dodgson condensation identity relating the F's, and exhaustive
// verifiers for the duality and order facts the rectangles satisfy.

namespace spehlab {

/// Enumeration beyond this many support points is refused ("skipped"),
/// never attempted; override per call or via the CLI --budget flag.
inline constexpr std::int64_t kDefaultBudget = 18;

/// Parameters of a rectangle family member.
struct SpehParams {
  std::int64_t l = 1;        // segment length
  std::int64_t k = 1;        // number of segments
  std::int64_t spacing = 1;  // center spacing denominator (bar variant)
  std::string line = kDefaultLine;
};

/// The rectangle: k segments of length l in a centered staircase, ends at
/// (l-k)/2 + i - 1 for i = 1..k. Symmetric under reflect; l = 0 or k = 0
/// gives the empty multisegment (the unit monomial).
inline Multisegment rect(std::int64_t l, std::int64_t k,
                         const std::string& line = kDefaultLine) {
  if (l < 0 || k < 0) throw std::invalid_argument("rect needs l, k >= 0");
  std::vector<Segment> segs;
  for (std::int64_t i = 1; i <= k; ++i) {
    const Rational end = Rational(l - k, 2) + Rational(i - 1);
    if (auto s = seg_from_end(end, l, line)) segs.push_back(std::move(*s));
  }
  return Multisegment(std::move(segs));
}

/// The rectangle with centers compressed by an integer spacing s >= 1:
/// k segments of length l centered at ((k-1)/2 - j)/s. Equals rect(l,k)
/// when s = 1; for s > 1 consecutive segments land on distinct cosets.
inline Multisegment bar_u(std::int64_t l, std::int64_t k, std::int64_t s,
                          const std::string& line = kDefaultLine) {
  if (l < 0 || k < 0) throw std::invalid_argument("bar_u needs l, k >= 0");
  if (s < 1) throw std::invalid_argument("bar_u needs spacing >= 1");
  std::vector<Segment> segs;
  for (std::int64_t j = 0; j < k; ++j) {
    const Rational center = Rational(k - 1 - 2 * j, 2) / Rational(s);
    const Rational begin = center - Rational(l - 1, 2);
    if (auto seg = seg_from_begin(begin, l, line)) segs.push_back(std::move(*seg));
  }
  return Multisegment(std::move(segs));
}

inline Multisegment speh_multisegment(const SpehParams& p) {
  return bar_u(p.l, p.k, p.spacing, p.line);
}

/// The determinantal character candidate: the signed sum over
/// permutations w of {1..k} with w(i)+l-i >= 0 of the monomial whose i-th
/// factor is the segment beginning at i - (k+l)/2 of length w(i)+l-i
/// (length 0 contributes the unit). The identity permutation contributes
/// exactly rect(l,k); F(l,0) = F(0,k) = 1.
inline RingElement char_F(std::int64_t l, std::int64_t k,
                          const std::string& line = kDefaultLine) {
  if (l < 0 || k < 0) throw std::invalid_argument("char_F needs l, k >= 0");
  RingElement out;
  std::vector<std::int64_t> w(k);
  std::iota(w.begin(), w.end(), 1);
  do {
    bool admissible = true;
    for (std::int64_t i = 1; i <= k; ++i) {
      if (w[i - 1] + l - i < 0) {
        admissible = false;
        break;
      }
    }
    if (!admissible) continue;

    std::int64_t inversions = 0;
    for (std::int64_t i = 0; i < k; ++i)
      for (std::int64_t j = i + 1; j < k; ++j)
        if (w[i] > w[j]) ++inversions;

    std::vector<Segment> segs;
    for (std::int64_t i = 1; i <= k; ++i) {
      const std::int64_t len = w[i - 1] + l - i;
      const Rational begin = Rational(2 * i - k - l, 2);
      if (auto s = seg_from_begin(begin, len, line)) segs.push_back(std::move(*s));
    }
    out.add_term(Multisegment(std::move(segs)), inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

/// The condensation identity: the half-twists of F(l,k) multiply to
/// F(l,k-1)*F(l,k+1) + F(l-1,k)*F(l+1,k), exactly, with the l-1 = 0 and
/// k-1 = 0 factors equal to 1 by convention.
inline VerificationReport dodgson_check(std::int64_t l, std::int64_t k) {
  if (l < 1 || k < 1) throw std::invalid_argument("dodgson_check needs l, k >= 1");
  VerificationReport r;
  r.suite = "dodgson";
  r.params = {{"l", l}, {"k", k}};
  const RingElement f = char_F(l, k);
  const RingElement lhs = twist(f, Rational(-1, 2)) * twist(f, Rational(1, 2));
  const RingElement rhs =
      char_F(l, k - 1) * char_F(l, k + 1) + char_F(l - 1, k) * char_F(l + 1, k);
  r.details = {{"lhs_terms", lhs.terms().size()}, {"rhs_terms", rhs.terms().size()}};
  if (!(lhs == rhs)) {
    r.status = Status::fail;
    r.counterexample = {"l=" + std::to_string(l) + ",k=" + std::to_string(k),
                        format(rhs), format(lhs)};
  }
  return r;
}

/// Duality swaps the rectangle's sides: mwa_dual(rect(l,k)) = rect(k,l).
inline VerificationReport theorem_a_check(std::int64_t l, std::int64_t k) {
  if (l < 1 || k < 1) throw std::invalid_argument("theorem_a_check needs l, k >= 1");
  VerificationReport r;
  r.suite = "theorem-a";
  r.params = {{"l", l}, {"k", k}};
  const Multisegment dual = mwa_dual(rect(l, k));
  const Multisegment expected = rect(k, l);
  if (!(dual == expected)) {
    r.status = Status::fail;
    r.counterexample = {format(rect(l, k)), format(expected), format(dual)};
  }
  return r;
}

namespace detail {

inline VerificationReport budget_skip(VerificationReport r, std::int64_t points,
                                      std::int64_t budget) {
  r.status = Status::skipped;
  r.details = {{"support_points", points}, {"budget", budget}};
  return r;
}

}  // namespace detail

/// The order-theoretic core of the first irreducibility argument: every
/// multisegment strictly below the doubled rectangle 2*rect(l,k) has dual
/// maxlength at most k, while every one strictly below 2*rect(k,l) has
/// maxlength at least k+1 — so the dual of the first lower set misses the
/// second entirely.
inline VerificationReport theorem_i_core(std::int64_t l, std::int64_t k,
                                         std::int64_t budget = kDefaultBudget) {
  if (l < 1 || k < 1) throw std::invalid_argument("theorem_i_core needs l, k >= 1");
  VerificationReport r;
  r.suite = "theorem-i";
  r.params = {{"l", l}, {"k", k}};
  const std::int64_t points = 2 * l * k;
  if (points > budget) return detail::budget_skip(std::move(r), points, budget);

  const Multisegment top_first = rect(l, k) + rect(l, k);
  std::size_t below_first = 0;
  for (const Multisegment& n : downset(top_first)) {
    if (n == top_first) continue;
    ++below_first;
    const std::int64_t got = mwa_dual(n).maxlength();
    if (got > k) {
      r.status = Status::fail;
      r.counterexample = {format(n), "m(dual) <= " + std::to_string(k),
                          "m(dual) = " + std::to_string(got)};
      return r;
    }
  }

  const Multisegment top_second = rect(k, l) + rect(k, l);
  std::size_t below_second = 0;
  for (const Multisegment& n : downset(top_second)) {
    if (n == top_second) continue;
    ++below_second;
    if (n.maxlength() <= k) {
      r.status = Status::fail;
      r.counterexample = {format(n), "m >= " + std::to_string(k + 1),
                          "m = " + std::to_string(n.maxlength())};
      return r;
    }
  }
  r.details = {{"strictly_below_first", below_first},
               {"strictly_below_second", below_second}};
  return r;
}

/// The core of the second argument (k >= 2): everything strictly below
/// rect(l,k-1) + rect(l,k+1) still has a segment longer than l, and the
/// dual of everything below-or-equal rect(k-1,l) + rect(k+1,l) has no
/// segment longer than l.
inline VerificationReport theorem_ii_core(std::int64_t l, std::int64_t k,
                                          std::int64_t budget = kDefaultBudget) {
  if (l < 1 || k < 2) throw std::invalid_argument("theorem_ii_core needs l >= 1, k >= 2");
  VerificationReport r;
  r.suite = "theorem-ii";
  r.params = {{"l", l}, {"k", k}};
  const std::int64_t points = 2 * l * k;
  if (points > budget) return detail::budget_skip(std::move(r), points, budget);

  const Multisegment top_first = rect(l, k - 1) + rect(l, k + 1);
  std::size_t below_first = 0;
  for (const Multisegment& n : downset(top_first)) {
    if (n == top_first) continue;
    ++below_first;
    if (n.maxlength() <= l) {
      r.status = Status::fail;
      r.counterexample = {format(n), "m >= " + std::to_string(l + 1),
                          "m = " + std::to_string(n.maxlength())};
      return r;
    }
  }

  const Multisegment top_second = rect(k - 1, l) + rect(k + 1, l);
  std::size_t at_or_below_second = 0;
  for (const Multisegment& n : downset(top_second)) {
    ++at_or_below_second;  // the top itself is included on this side
    const std::int64_t got = mwa_dual(n).maxlength();
    if (got > l) {
      r.status = Status::fail;
      r.counterexample = {format(n), "m(dual) <= " + std::to_string(l),
                          "m(dual) = " + std::to_string(got)};
      return r;
    }
  }
  r.details = {{"strictly_below_first", below_first},
               {"at_or_below_second", at_or_below_second}};
  return r;
}

/// The triangularity fact: F(l,k)'s dominant monomial is rect(l,k) with
/// coefficient +1, every other surviving monomial strictly below it.
inline VerificationReport leading_check(std::int64_t l, std::int64_t k) {
  if (l < 1 || k < 1) throw std::invalid_argument("leading_check needs l, k >= 1");
  VerificationReport r;
  r.suite = "leading";
  r.params = {{"l", l}, {"k", k}};
  const RingElement f = char_F(l, k);
  const Multisegment expected = rect(l, k);
  try {
    const auto [mono, coeff] = dominant_monomial(f);
    r.details = {{"terms", f.terms().size()}};
    if (mono == expected && coeff == 1) return r;
    r.status = Status::fail;
    r.counterexample = {format(f), format(expected) + " with coefficient 1",
                        format(mono) + " with coefficient " + std::to_string(coeff)};
  } catch (const std::domain_error& ex) {
    r.status = Status::fail;
    r.counterexample = {format(f), format(expected) + " with coefficient 1", ex.what()};
  }
  return r;
}

}  // namespace spehlab
