#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include <json.hpp>

#include "spehlab/io.hpp"
#include "spehlab/multisegment.hpp"
#include "spehlab/poset.hpp"

// The Grothendieck ring in the standard basis: formal integer combinations
// of multisegment monomials. Monomials multiply by multiset union, so the
// ring is a polynomial ring over Z with one variable per segment.

namespace spehlab {

/// A finite Z-linear combination of multisegment monomials. Stored terms
/// always carry nonzero coefficients; coefficient arithmetic is checked.
class RingElement {
 public:
  RingElement() = default;

  static RingElement monomial(Multisegment m, std::int64_t coeff = 1) {
    RingElement x;
    if (coeff != 0) x.terms_[std::move(m)] = coeff;
    return x;
  }

  static RingElement one() { return monomial(Multisegment()); }

  const std::map<Multisegment, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Multisegment& m, std::int64_t coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_[m] = coeff;
      return;
    }
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
  }

  RingElement& operator+=(const RingElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  RingElement& operator-=(const RingElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, checked_neg(c));
    return *this;
  }

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }

  RingElement operator-() const {
    RingElement x;
    for (const auto& [m, c] : terms_) x.terms_[m] = checked_neg(c);
    return x;
  }

  friend RingElement operator*(const RingElement& a, const RingElement& b) {
    RingElement x;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) x.add_term(ma + mb, checked_mul(ca, cb));
    return x;
  }
  RingElement& operator*=(const RingElement& o) { return *this = *this * o; }

  friend RingElement operator*(std::int64_t c, const RingElement& a) {
    RingElement x;
    if (c != 0)
      for (const auto& [m, coeff] : a.terms_) x.terms_[m] = checked_mul(c, coeff);
    return x;
  }

  bool operator==(const RingElement&) const = default;

 private:
  std::map<Multisegment, std::int64_t> terms_;
};

/// Shifts every segment of every monomial by q. A ring automorphism;
/// twist(x, 0) = x and twists compose additively.
inline RingElement twist(const RingElement& x, const Rational& q) {
  RingElement out;
  for (const auto& [m, c] : x.terms()) {
    std::vector<Segment> segs;
    segs.reserve(m.size());
    for (const Segment& s : m.segments()) segs.emplace_back(s.begin + q, s.end + q, s.line);
    out.add_term(Multisegment(std::move(segs)), c);
  }
  return out;
}

/// Sends each segment [b, e] to [-e, -b]: the order-2 automorphism fixing
/// anything centered at 0.
inline RingElement reflect(const RingElement& x) {
  RingElement out;
  for (const auto& [m, c] : x.terms()) {
    std::vector<Segment> segs;
    segs.reserve(m.size());
    for (const Segment& s : m.segments()) segs.emplace_back(-s.end, -s.begin, s.line);
    out.add_term(Multisegment(std::move(segs)), c);
  }
  return out;
}

/// Polynomial degree: the largest thickness among the monomials.
inline std::int64_t degree(const RingElement& x) {
  if (x.is_zero()) throw std::domain_error("degree of the zero element");
  std::int64_t d = 0;
  for (const auto& [m, c] : x.terms()) d = std::max(d, m.thickness());
  return d;
}

/// The unique monomial strictly above every other monomial of x, with its
/// coefficient. Throws when the maxima are incomparable.
inline std::pair<Multisegment, std::int64_t> dominant_monomial(const RingElement& x) {
  if (x.is_zero()) throw std::domain_error("dominant monomial of the zero element");
  // The energy is strictly monotone along the order, so a dominant
  // monomial is necessarily the unique energy minimizer.
  const Multisegment* best = nullptr;
  bool tied = false;
  std::int64_t best_energy = 0;
  for (const auto& [m, c] : x.terms()) {
    const std::int64_t e = detail::energy(m);
    if (!best || e < best_energy) {
      best = &m;
      best_energy = e;
      tied = false;
    } else if (e == best_energy) {
      tied = true;
    }
  }
  if (tied) throw std::domain_error("no dominant monomial");

  // One descending sweep from the candidate must meet every other
  // monomial. Nodes past the deepest outstanding target (in energy) can
  // never reach one and are cut.
  std::unordered_set<Multisegment> missing;
  for (const auto& [m, c] : x.terms())
    if (m != *best) missing.insert(m);
  if (!missing.empty()) {
    const auto missing_energy_cap = [&missing]() {
      std::int64_t cap = 0;
      for (const Multisegment& m : missing) cap = std::max(cap, detail::energy(m));
      return cap;
    };
    std::int64_t cap = missing_energy_cap();
    std::unordered_set<Multisegment> seen{*best};
    std::deque<Multisegment> queue{*best};
    while (!queue.empty() && !missing.empty()) {
      Multisegment cur = std::move(queue.front());
      queue.pop_front();
      for (Multisegment& next : successors_down(cur)) {
        if (missing.erase(next) > 0) {
          if (missing.empty()) break;
          cap = missing_energy_cap();
        }
        if (detail::energy(next) >= cap) continue;  // nothing left below here
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    }
    if (!missing.empty()) throw std::domain_error("no dominant monomial");
  }
  return {*best, x.terms().at(*best)};
}

/// Text form: terms in canonical monomial order, joined by " + " / " - ",
/// each `coeff*multisegment` with the coefficient omitted when 1. The
/// spaced separators distinguish term joins from the tight '+' joining
/// segments inside one monomial.
inline std::string format(const RingElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    const std::int64_t mag = c < 0 ? checked_neg(c) : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += format(m);
  }
  return out;
}

inline RingElement parse_ring_element(std::string_view text) {
  detail::Scanner sc(text);
  RingElement x;
  sc.skip_ws();
  if (sc.peek() == '0') {
    sc.expect('0', "'0'");
    sc.expect_end();
    return x;  // the zero element stands alone
  }
  bool negative = sc.try_consume('-');
  for (;;) {
    sc.skip_ws();
    std::int64_t coeff = 1;
    bool unit_term = false;
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      // digits followed by '*' are a coefficient; a bare '1' is the unit
      // monomial itself
      std::size_t mark = sc.pos();
      std::int64_t v = sc.parse_int();
      if (sc.try_consume('*')) {
        if (v == 0) throw ParseError(mark, "zero coefficient");
        coeff = v;
      } else if (v == 1) {
        unit_term = true;
      } else {
        throw ParseError(mark, "expected '*' after coefficient");
      }
    }
    Multisegment mono = unit_term ? Multisegment() : sc.parse_multisegment();
    x.add_term(mono, negative ? checked_neg(coeff) : coeff);
    sc.skip_ws();
    if (sc.try_consume('+')) {
      negative = false;
    } else if (sc.try_consume('-')) {
      negative = true;
    } else {
      break;
    }
  }
  sc.expect_end();
  return x;
}

/// JSON form: a list of {"coeff": n, "segments": [...]} objects in
/// canonical order.
inline nlohmann::json to_json(const RingElement& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : x.terms()) {
    nlohmann::json t = to_json(m);
    t["coeff"] = c;
    terms.push_back(std::move(t));
  }
  return terms;
}

inline RingElement ring_element_from_json(const nlohmann::json& j) {
  RingElement x;
  for (const auto& t : j) x.add_term(multisegment_from_json(t), t.at("coeff").get<std::int64_t>());
  return x;
}

}  // namespace spehlab
