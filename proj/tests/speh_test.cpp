// Rectangles, the determinantal character, condensation, and the
// exhaustive theorem cores.

#include <gtest/gtest.h>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "spehlab/io.hpp"
#include "spehlab/speh.hpp"

namespace {

using namespace spehlab;

Multisegment ms(const char* text) { return parse_multisegment(text); }
RingElement mono(const char* text) { return RingElement::monomial(ms(text)); }

// Independent oracle for char_F: cofactor expansion of the k x k matrix
// whose (i,j) entry is the segment monomial beginning at (2i-k-l)/2 of
// length j+l-i (unit when zero, ring zero when negative). The formula
// under test sums over permutations instead; the two only agree if both
// are right.
RingElement det(std::vector<std::vector<RingElement>> a) {
  const std::size_t n = a.size();
  if (n == 0) return RingElement::one();
  RingElement out;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    std::vector<std::vector<RingElement>> minor(n - 1, std::vector<RingElement>(n - 1));
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, w = 0; c < n; ++c)
        if (c != j) minor[r - 1][w++] = a[r][c];
    const RingElement term = a[0][j] * det(std::move(minor));
    if (j % 2 == 0) out += term;
    else out -= term;
  }
  return out;
}

RingElement char_matrix_det(std::int64_t l, std::int64_t k) {
  std::vector<std::vector<RingElement>> a(k, std::vector<RingElement>(k));
  for (std::int64_t i = 1; i <= k; ++i) {
    for (std::int64_t j = 1; j <= k; ++j) {
      const std::int64_t len = j + l - i;
      if (len < 0) continue;  // ring zero
      const auto seg = seg_from_begin(Rational(2 * i - k - l, 2), len);
      a[i - 1][j - 1] = seg ? RingElement::monomial(Multisegment({*seg})) : RingElement::one();
    }
  }
  return det(std::move(a));
}

TEST(Rect, GoldenValues) {
  EXPECT_EQ(rect(1, 1), ms("(0..0)"));
  EXPECT_EQ(rect(2, 1), ms("(-1/2..1/2)"));
  EXPECT_EQ(rect(1, 2), ms("(-1/2..-1/2)+(1/2..1/2)"));
  EXPECT_EQ(rect(2, 3), ms("(-3/2..-1/2)+(-1/2..1/2)+(1/2..3/2)"));
  EXPECT_EQ(rect(3, 2), ms("(-3/2..1/2)+(-1/2..3/2)"));
  EXPECT_EQ(rect(0, 3), ms("1"));
  EXPECT_EQ(rect(3, 0), ms("1"));
  EXPECT_THROW(rect(-1, 2), std::invalid_argument);
}

TEST(Rect, ShapeAndSymmetry) {
  for (std::int64_t l = 1; l <= 5; ++l) {
    for (std::int64_t k = 1; k <= 5; ++k) {
      const Multisegment r = rect(l, k);
      EXPECT_EQ(r.thickness(), k);
      EXPECT_EQ(r.maxlength(), l);
      EXPECT_EQ(static_cast<std::int64_t>(r.support().size()), l * k);
      EXPECT_EQ(reflect(RingElement::monomial(r)), RingElement::monomial(r));
    }
  }
}

TEST(BarU, CompressesCenters) {
  EXPECT_EQ(bar_u(2, 3, 1), rect(2, 3));
  EXPECT_EQ(bar_u(1, 2, 2), ms("(-1/4..-1/4)+(1/4..1/4)"));
  EXPECT_EQ(bar_u(2, 2, 3), ms("(-2/3..1/3)+(-1/3..2/3)"));
  EXPECT_THROW(bar_u(1, 2, 0), std::invalid_argument);
  const SpehParams p{.l = 1, .k = 2, .spacing = 2, .line = "tau"};
  EXPECT_EQ(speh_multisegment(p), ms("tau:(-1/4..-1/4)+tau:(1/4..1/4)"));
}

TEST(CharF, ColumnCaseIsTheRectangle) {
  for (std::int64_t l = 1; l <= 6; ++l) {
    EXPECT_EQ(char_F(l, 1), RingElement::monomial(rect(l, 1))) << l;
  }
}

TEST(CharF, HandExpandedSmallCases) {
  EXPECT_EQ(char_F(1, 2), RingElement::monomial(rect(1, 2)) - mono("(-1/2..1/2)"));
  EXPECT_EQ(char_F(2, 2), RingElement::monomial(rect(2, 2)) - mono("(-1..1)+(0..0)"));
  // k = 3, l = 1: two of the six permutations fall to negative lengths
  const RingElement expected = RingElement::monomial(rect(1, 3)) - mono("(-1..-1)+(0..1)") -
                               mono("(-1..0)+(1..1)") + mono("(-1..1)");
  EXPECT_EQ(char_F(1, 3), expected);
  EXPECT_EQ(char_F(0, 2), RingElement::one());
  EXPECT_EQ(char_F(3, 0), RingElement::one());
}

TEST(CharF, MatchesCofactorExpansion) {
  for (std::int64_t l = 1; l <= 4; ++l) {
    for (std::int64_t k = 1; k <= 4; ++k) {
      EXPECT_EQ(char_F(l, k), char_matrix_det(l, k)) << "l=" << l << " k=" << k;
    }
  }
  EXPECT_EQ(char_F(1, 5), char_matrix_det(1, 5));
}

TEST(CharF, ReflectInvariant) {
  for (std::int64_t l = 1; l <= 4; ++l) {
    for (std::int64_t k = 1; k <= 4; ++k) {
      const RingElement f = char_F(l, k);
      EXPECT_EQ(reflect(f), f) << "l=" << l << " k=" << k;
    }
  }
}

TEST(CharF, DegreeAndDominance) {
  for (std::int64_t l = 1; l <= 4; ++l) {
    for (std::int64_t k = 1; k <= 4; ++k) {
      const RingElement f = char_F(l, k);
      EXPECT_EQ(degree(f), k);
      const auto [mono_top, coeff] = dominant_monomial(f);
      EXPECT_EQ(mono_top, rect(l, k));
      EXPECT_EQ(coeff, 1);
    }
  }
}

TEST(Dodgson, IdentityHoldsIncludingBoundaries) {
  for (std::int64_t l = 1; l <= 4; ++l) {
    for (std::int64_t k = 1; k <= 4; ++k) {
      const VerificationReport r = dodgson_check(l, k);
      EXPECT_EQ(r.status, Status::pass) << "l=" << l << " k=" << k;
      EXPECT_FALSE(r.counterexample.has_value());
      EXPECT_GE(r.details.at("lhs_terms").get<std::int64_t>(), 1);
    }
  }
  EXPECT_THROW(dodgson_check(0, 1), std::invalid_argument);
}

TEST(TheoremA, RectangleDualSwapsSides) {
  for (std::int64_t l = 1; l <= 6; ++l) {
    for (std::int64_t k = 1; k <= 6; ++k) {
      EXPECT_TRUE(theorem_a_check(l, k).passed()) << "l=" << l << " k=" << k;
    }
  }
}

TEST(TheoremICore, SmallCases) {
  const VerificationReport vacuous = theorem_i_core(1, 1);
  EXPECT_EQ(vacuous.status, Status::pass);
  EXPECT_EQ(vacuous.details.at("strictly_below_first").get<std::int64_t>(), 0);
  EXPECT_TRUE(theorem_i_core(1, 2).passed());
  EXPECT_TRUE(theorem_i_core(2, 2).passed());
  EXPECT_TRUE(theorem_i_core(3, 1).passed());
}

TEST(TheoremIICore, SmallCases) {
  EXPECT_TRUE(theorem_ii_core(1, 2).passed());
  EXPECT_TRUE(theorem_ii_core(1, 3).passed());
  EXPECT_TRUE(theorem_ii_core(2, 2).passed());
  EXPECT_GE(theorem_ii_core(1, 2).details.at("at_or_below_second").get<std::int64_t>(), 1);
  EXPECT_THROW(theorem_ii_core(1, 1), std::invalid_argument);
}

TEST(TheoremCores, BudgetRefusalIsReported) {
  const VerificationReport r = theorem_i_core(5, 2, 18);
  EXPECT_EQ(r.status, Status::skipped);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.details.at("support_points").get<std::int64_t>(), 20);
  EXPECT_EQ(r.details.at("budget").get<std::int64_t>(), 18);
  EXPECT_EQ(theorem_ii_core(5, 2, 18).status, Status::skipped);
  // a raised budget runs the same parameters for real
  EXPECT_EQ(theorem_i_core(3, 3, 18).status, Status::pass);
}

TEST(LeadingCheck, RectangleLeadsWithCoefficientOne) {
  EXPECT_TRUE(leading_check(1, 2).passed());
  EXPECT_TRUE(leading_check(2, 2).passed());
  EXPECT_TRUE(leading_check(4, 1).passed());
}

}  // namespace
