// The extraction algorithm: golden duals, the round log, tie-break
// independence, and the (P)/(P') properties.

#include <gtest/gtest.h>

#include <cstdint>
#include <stdexcept>

#include "spehlab/io.hpp"
#include "spehlab/mwa.hpp"
#include "spehlab/verify.hpp"

namespace {

using namespace spehlab;

Multisegment ms(const char* text) { return parse_multisegment(text); }

TEST(MwaDual, GoldenValues) {
  EXPECT_EQ(mwa_dual(ms("1")), ms("1"));
  EXPECT_EQ(mwa_dual(ms("(0..0)")), ms("(0..0)"));
  EXPECT_EQ(mwa_dual(ms("(0..2)")), ms("(0..0)+(1..1)+(2..2)"));
  EXPECT_EQ(mwa_dual(ms("(-1..-1)+(0..0)+(1..1)")), ms("(-1..1)"));
  EXPECT_EQ(mwa_dual(ms("(-1..0)+(0..1)")), ms("(-1..0)+(0..1)"));  // self-dual
  EXPECT_EQ(mwa_dual(ms("(0..1)+(0..1)")), ms("(0..0)+(0..0)+(1..1)+(1..1)"));
  // the rectangle swaps sides: 3 segments of length 2 <-> 2 of length 3
  EXPECT_EQ(mwa_dual(ms("(-3/2..-1/2)+(-1/2..1/2)+(1/2..3/2)")), ms("(-3/2..1/2)+(-1/2..3/2)"));
}

TEST(MwaDual, ClassesAreIndependent) {
  EXPECT_EQ(mwa_dual(ms("(0..1)+tau:(0..0)+tau:(1..1)")), ms("(0..0)+(1..1)+tau:(0..1)"));
  EXPECT_EQ(mwa_dual(ms("(0..1)+(1/2..1/2)")), ms("(0..0)+(1/2..1/2)+(1..1)"));
  // distant segments in one class still dualize pointwise
  EXPECT_EQ(mwa_dual(ms("(0..0)+(5..5)")), ms("(0..0)+(5..5)"));
}

TEST(MwaTrace, SingleSegmentPeelsFromTheRight) {
  const std::vector<ExtractionRound> rounds = mwa_trace(ms("(0..2)"));
  ASSERT_EQ(rounds.size(), 3u);
  EXPECT_EQ(rounds[0].produced, Segment(Rational(2), Rational(2)));
  EXPECT_EQ(rounds[1].produced, Segment(Rational(1), Rational(1)));
  EXPECT_EQ(rounds[2].produced, Segment(Rational(0), Rational(0)));
  ASSERT_EQ(rounds[0].consumed.size(), 1u);
  EXPECT_EQ(rounds[0].consumed[0], Segment(Rational(0), Rational(2)));
  EXPECT_EQ(rounds[1].consumed[0], Segment(Rational(0), Rational(1)));
}

TEST(MwaTrace, ChainWalksLeftward) {
  // One round: delta_0 = (1..1), delta_1 = (-1..0) (ends one earlier, not
  // included), producing (0..1) and leaving (-1..-1) for round two.
  const std::vector<ExtractionRound> rounds = mwa_trace(ms("(-1..0)+(1..1)"));
  ASSERT_EQ(rounds.size(), 2u);
  EXPECT_EQ(rounds[0].produced, Segment(Rational(0), Rational(1)));
  const std::vector<Segment> chain = {Segment(Rational(1), Rational(1)),
                                      Segment(Rational(-1), Rational(0))};
  EXPECT_EQ(rounds[0].consumed, chain);
  EXPECT_EQ(rounds[1].produced, Segment(Rational(-1), Rational(-1)));
}

TEST(MwaTrace, ShortestEligibleWins) {
  // Both segments end at the maximum; the chain must start with the
  // shorter (0..1). Starting at (-1..1) instead would let (0..0) later
  // continue a chain and produce a non-involutive answer.
  const std::vector<ExtractionRound> rounds = mwa_trace(ms("(-1..1)+(0..1)"));
  ASSERT_EQ(rounds.size(), 5u);
  EXPECT_EQ(rounds[0].produced, Segment(Rational(1), Rational(1)));
  ASSERT_EQ(rounds[0].consumed.size(), 1u);
  EXPECT_EQ(rounds[0].consumed[0], Segment(Rational(0), Rational(1)));
  EXPECT_EQ(rounds[1].produced, Segment(Rational(1), Rational(1)));
  EXPECT_EQ(rounds[1].consumed[0], Segment(Rational(-1), Rational(1)));
  EXPECT_EQ(mwa_dual(ms("(-1..1)+(0..1)")), ms("(-1..-1)+(0..0)+(0..0)+(1..1)+(1..1)"));
  // shorter-first also settles equal endings within one chain's steps
  EXPECT_EQ(mwa_dual(ms("(0..1)+(1..1)")), ms("(0..0)+(1..1)+(1..1)"));
}

TEST(MwaDual, InvolutionAndSupportOnCorpus) {
  for (const PointMultiset& sup : all_supports(2, 2)) {
    for (const Multisegment& m : enumerate_with_support(sup)) {
      const Multisegment dual = mwa_dual(m);
      EXPECT_EQ(dual.support(), m.support()) << format(m);
      EXPECT_EQ(mwa_dual(dual), m) << format(m);
    }
  }
}

TEST(MwaDual, TieBreakPolicyNeverMatters) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const TieBreaker policy = random_tie_break(seed);
    for (const PointMultiset& sup : all_supports(2, 2)) {
      for (const Multisegment& m : enumerate_with_support(sup)) {
        EXPECT_EQ(mwa_dual_with_choices(m, policy), mwa_dual(m))
            << format(m) << " under seed " << seed;
      }
    }
  }
}

TEST(MwaDual, BrokenPolicyFailsLoudly) {
  const TieBreaker broken = [](const std::vector<Segment>&) -> std::size_t { return 99; };
  EXPECT_THROW(mwa_dual_with_choices(ms("(0..1)"), broken), std::out_of_range);
}

TEST(EndingsOnly, HoldsOnCorpus) {
  // While a class's maximum ending is intact, produced segments use only
  // points that were endings of the input.
  for (const PointMultiset& sup : all_supports(2, 2)) {
    for (const Multisegment& m : enumerate_with_support(sup)) {
      EXPECT_TRUE(endings_only_holds(m)) << format(m);
    }
  }
}

TEST(CheckP, SeparatesHypothesisFromConclusion) {
  // E(M) = {0,5} spans six points: k = 1 violates the hypothesis ...
  EXPECT_THROW(check_P(ms("(0..0)+(5..5)"), 1), std::invalid_argument);
  // ... while k = 6 admits it, and the property then holds.
  EXPECT_TRUE(check_P(ms("(0..0)+(5..5)"), 6));
  EXPECT_TRUE(check_P(ms("(0..2)"), 1));
  EXPECT_TRUE(check_P(ms("(0..1)+(0..1)"), 1));
  EXPECT_TRUE(check_P(ms("1"), 0));
  // endings on two cosets or two lines never fit one segment
  EXPECT_THROW(check_P(ms("(0..0)+(1/2..1/2)"), 3), std::invalid_argument);
  EXPECT_THROW(check_P(ms("(0..0)+tau:(0..0)"), 3), std::invalid_argument);
}

TEST(CheckPPrime, HoldsOnCorpusAndIsTight) {
  for (const PointMultiset& sup : all_supports(2, 2)) {
    for (const Multisegment& m : enumerate_with_support(sup)) {
      EXPECT_TRUE(check_P_prime(m)) << format(m);
    }
  }
  // tight: dual of a single segment has as many segments as points
  EXPECT_EQ(mwa_dual(ms("(0..2)")).maxlength(), 1);
  EXPECT_EQ(ms("(0..2)").thickness(), 1);
}

}  // namespace
