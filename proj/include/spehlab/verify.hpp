#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spehlab/io.hpp"
#include "spehlab/mwa.hpp"
#include "spehlab/multisegment.hpp"
#include "spehlab/poset.hpp"
#include "spehlab/report.hpp"
#include "spehlab/speh.hpp"

// Exhaustive verification suites. Corpus suites sweep every multisegment
// over every support inside a small box of lattice points; parameterized
// suites sweep (l,k) grids. Each suite returns one report per support or
// per parameter pair, with the first counterexample when one exists.

namespace spehlab {

/// Every point multiset on {0, ..., max_point} (default line) with
/// per-point multiplicity at most max_mult, the empty support included.
inline std::vector<PointMultiset> all_supports(std::int64_t max_point,
                                               std::int64_t max_mult) {
  if (max_point < 0 || max_mult < 0)
    throw std::invalid_argument("all_supports needs max_point, max_mult >= 0");
  std::vector<PointMultiset> out;
  std::vector<std::int64_t> mult(static_cast<std::size_t>(max_point) + 1, 0);
  for (;;) {
    PointMultiset pts;
    for (std::int64_t p = 0; p <= max_point; ++p)
      for (std::int64_t c = 0; c < mult[p]; ++c) pts.push_back({kDefaultLine, Rational(p)});
    out.push_back(std::move(pts));
    std::size_t i = 0;
    while (i < mult.size() && mult[i] == max_mult) mult[i++] = 0;
    if (i == mult.size()) break;
    ++mult[i];
  }
  return out;
}

/// Involution and support preservation: applying the extraction twice
/// returns the input, and the dual never moves the support.
inline std::vector<VerificationReport> suite_involution(std::int64_t max_point = 3,
                                                        std::int64_t max_mult = 2) {
  std::vector<VerificationReport> out;
  for (const PointMultiset& sup : all_supports(max_point, max_mult)) {
    VerificationReport r;
    r.suite = "involution";
    std::size_t instances = 0;
    for (const Multisegment& m : enumerate_with_support(sup)) {
      ++instances;
      const Multisegment dual = mwa_dual(m);
      if (dual.support() != m.support()) {
        r.status = Status::fail;
        r.counterexample = {format(m), "support " + format(sup), format(dual.support())};
        break;
      }
      const Multisegment back = mwa_dual(dual);
      if (!(back == m)) {
        r.status = Status::fail;
        r.counterexample = {format(m), format(m), format(back)};
        break;
      }
    }
    r.params = {{"support", format(sup)}, {"instances", instances}};
    out.push_back(std::move(r));
  }
  return out;
}

/// Property (P) at the sharpest admissible window: E(M) spans some k
/// consecutive points, and the dual's maxlength must stay within k.
inline std::vector<VerificationReport> suite_P(std::int64_t max_point = 3,
                                               std::int64_t max_mult = 2) {
  std::vector<VerificationReport> out;
  for (const PointMultiset& sup : all_supports(max_point, max_mult)) {
    VerificationReport r;
    r.suite = "P";
    std::size_t instances = 0;
    for (const Multisegment& m : enumerate_with_support(sup)) {
      ++instances;
      const PointMultiset ends = m.endings();
      const std::int64_t k =
          ends.empty() ? 0 : (ends.back().x - ends.front().x).num() + 1;
      if (!check_P(m, k)) {
        r.status = Status::fail;
        r.counterexample = {format(m), "m(dual) <= " + std::to_string(k),
                            "m(dual) = " + std::to_string(mwa_dual(m).maxlength())};
        break;
      }
    }
    r.params = {{"support", format(sup)}, {"instances", instances}};
    out.push_back(std::move(r));
  }
  return out;
}

/// Property (P'): m(M^#) <= t(M) with no hypothesis at all.
inline std::vector<VerificationReport> suite_P_prime(std::int64_t max_point = 3,
                                                     std::int64_t max_mult = 2) {
  std::vector<VerificationReport> out;
  for (const PointMultiset& sup : all_supports(max_point, max_mult)) {
    VerificationReport r;
    r.suite = "Pprime";
    std::size_t instances = 0;
    for (const Multisegment& m : enumerate_with_support(sup)) {
      ++instances;
      if (!check_P_prime(m)) {
        r.status = Status::fail;
        r.counterexample = {format(m), "m(dual) <= " + std::to_string(m.thickness()),
                            "m(dual) = " + std::to_string(mwa_dual(m).maxlength())};
        break;
      }
    }
    r.params = {{"support", format(sup)}, {"instances", instances}};
    out.push_back(std::move(r));
  }
  return out;
}

/// Every elementary-operation edge moves the statistics the right way:
/// maxlength up, thickness down, beginnings/endings shrinking, support
/// fixed.
inline std::vector<VerificationReport> suite_monotonicity(std::int64_t max_point = 3,
                                                          std::int64_t max_mult = 2) {
  std::vector<VerificationReport> out;
  for (const PointMultiset& sup : all_supports(max_point, max_mult)) {
    VerificationReport r;
    r.suite = "monotonicity";
    std::size_t edges = 0;
    for (const Multisegment& m : enumerate_with_support(sup)) {
      for (const Multisegment& n : successors_down(m)) {
        ++edges;
        std::string broken;
        if (n.maxlength() < m.maxlength()) broken = "maxlength decreased downward";
        else if (n.thickness() > m.thickness()) broken = "thickness increased downward";
        else if (!multiset_includes(m.beginnings(), n.beginnings())) broken = "B grew downward";
        else if (!multiset_includes(m.endings(), n.endings())) broken = "E grew downward";
        else if (n.support() != m.support()) broken = "support changed";
        if (!broken.empty()) {
          r.status = Status::fail;
          r.counterexample = {format(m) + " -> " + format(n), "monotone statistics", broken};
          break;
        }
      }
      if (r.status == Status::fail) break;
    }
    r.params = {{"support", format(sup)}, {"edges", edges}};
    out.push_back(std::move(r));
  }
  return out;
}

namespace detail {

/// Reflexive reachability bitsets over an enumerated poset: row i holds
/// every j with node_j <= node_i.
inline std::vector<std::vector<std::uint64_t>> reach_below(
    const std::vector<Multisegment>& nodes) {
  std::map<Multisegment, std::size_t> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) index[nodes[i]] = i;
  const std::size_t n = nodes.size();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> reach(n, std::vector<std::uint64_t>(words, 0));
  std::vector<bool> ready(n, false);
  auto fill = [&](auto&& self, std::size_t u) -> void {
    if (ready[u]) return;
    ready[u] = true;
    reach[u][u / 64] |= std::uint64_t{1} << (u % 64);
    for (const Multisegment& next : successors_down(nodes[u])) {
      const std::size_t v = index.at(next);
      self(self, v);
      for (std::size_t w = 0; w < words; ++w) reach[u][w] |= reach[v][w];
    }
  };
  for (std::size_t i = 0; i < n; ++i) fill(fill, i);
  return reach;
}

inline bool reach_test(const std::vector<std::vector<std::uint64_t>>& reach,
                       std::size_t above, std::size_t below) {
  return (reach[above][below / 64] >> (below % 64)) & 1;
}

}  // namespace detail

/// Order reversal of duality at the poset extremes: every support poset
/// has a unique top (the all-singletons multisegment) and a unique bottom,
/// and mwa_dual exchanges them. Duality cannot reverse every comparable
/// pair — the poset on support {0,1,1,2} has two coatoms but a single
/// atom, so no involution reverses its full relation — and this exchange
/// is the strongest reversal statement that survives.
inline std::vector<VerificationReport> suite_order_reversal(std::int64_t max_point = 2,
                                                            std::int64_t max_mult = 2) {
  std::vector<VerificationReport> out;
  for (const PointMultiset& sup : all_supports(max_point, max_mult)) {
    VerificationReport r;
    r.suite = "order-reversal";
    const std::vector<Multisegment> nodes = enumerate_with_support(sup);
    const auto reach = detail::reach_below(nodes);

    std::vector<std::size_t> maxima, minima;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      bool above = false, below = false;
      for (std::size_t j = 0; j < nodes.size(); ++j) {
        if (j == i) continue;
        if (detail::reach_test(reach, j, i)) above = true;
        if (detail::reach_test(reach, i, j)) below = true;
      }
      if (!above) maxima.push_back(i);
      if (!below) minima.push_back(i);
    }

    std::vector<Segment> singles;
    singles.reserve(sup.size());
    for (const Point& p : sup) singles.emplace_back(p.x, p.x, p.line);
    const Multisegment split(std::move(singles));

    if (maxima.size() != 1 || minima.size() != 1) {
      r.status = Status::fail;
      r.counterexample = {format(sup), "one maximal and one minimal element",
                          std::to_string(maxima.size()) + " maxima, " +
                              std::to_string(minima.size()) + " minima"};
    } else {
      const Multisegment& top = nodes[maxima.front()];
      const Multisegment& bottom = nodes[minima.front()];
      if (top != split) {
        r.status = Status::fail;
        r.counterexample = {format(sup), format(split), format(top)};
      } else if (mwa_dual(top) != bottom) {
        r.status = Status::fail;
        r.counterexample = {format(top), format(bottom), format(mwa_dual(top))};
      } else if (mwa_dual(bottom) != top) {
        r.status = Status::fail;
        r.counterexample = {format(bottom), format(top), format(mwa_dual(bottom))};
      }
    }
    r.params = {{"support", format(sup)}, {"elements", nodes.size()}};
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<VerificationReport> suite_theorem_a(std::int64_t max_l = 6,
                                                       std::int64_t max_k = 6) {
  std::vector<VerificationReport> out;
  for (std::int64_t l = 1; l <= max_l; ++l)
    for (std::int64_t k = 1; k <= max_k; ++k) out.push_back(theorem_a_check(l, k));
  return out;
}

inline std::vector<VerificationReport> suite_theorem_i(std::int64_t max_l = 8,
                                                       std::int64_t max_k = 8,
                                                       std::int64_t max_points = 16,
                                                       std::int64_t budget = kDefaultBudget) {
  std::vector<VerificationReport> out;
  for (std::int64_t l = 1; l <= max_l; ++l)
    for (std::int64_t k = 1; k <= max_k; ++k)
      if (2 * l * k <= max_points) out.push_back(theorem_i_core(l, k, budget));
  return out;
}

inline std::vector<VerificationReport> suite_theorem_ii(std::int64_t max_l = 8,
                                                        std::int64_t max_k = 8,
                                                        std::int64_t max_points = 16,
                                                        std::int64_t budget = kDefaultBudget) {
  std::vector<VerificationReport> out;
  for (std::int64_t l = 1; l <= max_l; ++l)
    for (std::int64_t k = 2; k <= max_k; ++k)
      if (2 * l * k <= max_points) out.push_back(theorem_ii_core(l, k, budget));
  return out;
}

inline std::vector<VerificationReport> suite_dodgson(std::int64_t max_l = 4,
                                                     std::int64_t max_k = 4) {
  std::vector<VerificationReport> out;
  for (std::int64_t l = 1; l <= max_l; ++l)
    for (std::int64_t k = 1; k <= max_k; ++k) out.push_back(dodgson_check(l, k));
  return out;
}

inline std::vector<VerificationReport> suite_leading(std::int64_t max_l = 4,
                                                     std::int64_t max_k = 4) {
  std::vector<VerificationReport> out;
  for (std::int64_t l = 1; l <= max_l; ++l)
    for (std::int64_t k = 1; k <= max_k; ++k) out.push_back(leading_check(l, k));
  return out;
}

/// Optional per-suite overrides; anything unset falls back to the suite's
/// shipped default.
struct SuiteOptions {
  std::optional<std::int64_t> max_l;
  std::optional<std::int64_t> max_k;
  std::optional<std::int64_t> max_point;
  std::optional<std::int64_t> max_mult;
  std::optional<std::int64_t> max_points;
  std::optional<std::int64_t> budget;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "involution", "P",         "Pprime",    "order-reversal", "monotonicity",
      "theorem-a",  "theorem-i", "theorem-ii", "dodgson",        "leading"};
  return names;
}

inline std::vector<VerificationReport> run_suite(const std::string& name,
                                                 const SuiteOptions& opt = {}) {
  const auto pick = [](const std::optional<std::int64_t>& v, std::int64_t fallback) {
    return v.value_or(fallback);
  };
  if (name == "involution")
    return suite_involution(pick(opt.max_point, 3), pick(opt.max_mult, 2));
  if (name == "P") return suite_P(pick(opt.max_point, 3), pick(opt.max_mult, 2));
  if (name == "Pprime") return suite_P_prime(pick(opt.max_point, 3), pick(opt.max_mult, 2));
  if (name == "order-reversal")
    return suite_order_reversal(pick(opt.max_point, 2), pick(opt.max_mult, 2));
  if (name == "monotonicity")
    return suite_monotonicity(pick(opt.max_point, 3), pick(opt.max_mult, 2));
  if (name == "theorem-a") return suite_theorem_a(pick(opt.max_l, 6), pick(opt.max_k, 6));
  if (name == "theorem-i")
    return suite_theorem_i(pick(opt.max_l, 8), pick(opt.max_k, 8),
                           pick(opt.max_points, 16), pick(opt.budget, kDefaultBudget));
  if (name == "theorem-ii")
    return suite_theorem_ii(pick(opt.max_l, 8), pick(opt.max_k, 8),
                            pick(opt.max_points, 16), pick(opt.budget, kDefaultBudget));
  if (name == "dodgson") return suite_dodgson(pick(opt.max_l, 4), pick(opt.max_k, 4));
  if (name == "leading") return suite_leading(pick(opt.max_l, 4), pick(opt.max_k, 4));
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace spehlab
