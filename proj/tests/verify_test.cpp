// The verification suites: corpus generation, suite shapes, dispatch, and
// the report JSON schema.

#include <gtest/gtest.h>

#include <cstdint>
#include <stdexcept>
#include <string>

#include "spehlab/verify.hpp"

namespace {

using namespace spehlab;

bool all_pass(const std::vector<VerificationReport>& reports) {
  for (const VerificationReport& r : reports)
    if (!r.passed()) return false;
  return !reports.empty();
}

TEST(AllSupports, CountsAndBounds) {
  EXPECT_EQ(all_supports(1, 1).size(), 4u);
  EXPECT_EQ(all_supports(3, 2).size(), 81u);
  EXPECT_EQ(all_supports(0, 2).size(), 3u);
  EXPECT_TRUE(all_supports(1, 1).front().empty());  // the empty support counts
  EXPECT_THROW(all_supports(-1, 2), std::invalid_argument);
}

TEST(CorpusSuites, PassOnSmallBoxes) {
  EXPECT_TRUE(all_pass(suite_involution(2, 2)));
  EXPECT_TRUE(all_pass(suite_P(2, 2)));
  EXPECT_TRUE(all_pass(suite_P_prime(2, 2)));
  EXPECT_TRUE(all_pass(suite_monotonicity(2, 2)));
  EXPECT_TRUE(all_pass(suite_order_reversal(2, 2)));
}

TEST(CorpusSuites, ReportOneEntryPerSupport) {
  const std::vector<VerificationReport> reports = suite_involution(1, 2);
  EXPECT_EQ(reports.size(), 9u);
  std::size_t instances = 0;
  for (const VerificationReport& r : reports) {
    EXPECT_EQ(r.suite, "involution");
    EXPECT_TRUE(r.params.contains("support"));
    instances += r.params.at("instances").get<std::size_t>();
  }
  EXPECT_GT(instances, 9u);  // several supports carry more than one element
}

TEST(OrderReversal, ReportsPosetSizePerSupport) {
  bool found = false;
  for (const VerificationReport& r : suite_order_reversal(2, 1)) {
    if (r.params.at("support") == "0,1,2") {
      found = true;
      EXPECT_EQ(r.params.at("elements").get<std::int64_t>(), 4);  // the diamond
      EXPECT_TRUE(r.passed());
    }
  }
  EXPECT_TRUE(found);
}

// The full relation is not reversed by duality: on support {0,1,1,2} the
// three-segment node (0..1)+(1..1)+(2..2) sits strictly above the
// two-segment node (0..1)+(1..2), yet their duals are ordered the same
// way, not the opposite way. The suite therefore pins the exchange of the
// extremes, and this test pins the counterexample that rules out more.
TEST(OrderReversal, FullReversalIsFalseAndStaysFalse) {
  const Multisegment lo = parse_multisegment("(0..1)+(1..2)");
  const Multisegment hi = parse_multisegment("(0..1)+(1..1)+(2..2)");
  ASSERT_TRUE(is_leq(lo, hi));
  EXPECT_FALSE(is_leq(mwa_dual(hi), mwa_dual(lo)));   // reversal fails
  EXPECT_TRUE(is_leq(mwa_dual(lo), mwa_dual(hi)));    // this pair is even preserved
  EXPECT_EQ(mwa_dual(hi), parse_multisegment("(0..0)+(1..1)+(1..2)"));
  EXPECT_EQ(mwa_dual(lo), lo);
}

TEST(ParameterSuites, PassOnSmallGrids) {
  EXPECT_TRUE(all_pass(suite_theorem_a(3, 3)));
  EXPECT_TRUE(all_pass(suite_theorem_i(2, 2, 16, kDefaultBudget)));
  EXPECT_TRUE(all_pass(suite_theorem_ii(2, 3, 16, kDefaultBudget)));
  EXPECT_TRUE(all_pass(suite_dodgson(2, 2)));
  EXPECT_TRUE(all_pass(suite_leading(2, 2)));
}

TEST(ParameterSuites, SweepRespectsThePointCap) {
  // pairs with 2lk <= 8: (1,1) (1,2) (1,3) (1,4) (2,1) (2,2) (3,1) (4,1)
  EXPECT_EQ(suite_theorem_i(4, 4, 8, kDefaultBudget).size(), 8u);
  // same cap, k >= 2 only: (1,2) (1,3) (1,4) (2,2)
  EXPECT_EQ(suite_theorem_ii(4, 4, 8, kDefaultBudget).size(), 4u);
}

TEST(RunSuite, DispatchesEveryName) {
  SuiteOptions tiny;
  tiny.max_l = 1;
  tiny.max_k = 2;
  tiny.max_point = 1;
  tiny.max_mult = 1;
  for (const std::string& name : suite_names()) {
    const std::vector<VerificationReport> reports = run_suite(name, tiny);
    for (const VerificationReport& r : reports) EXPECT_TRUE(r.passed()) << name;
  }
  EXPECT_THROW(run_suite("nope"), std::invalid_argument);
}

TEST(RunSuite, BudgetOptionReachesTheCores) {
  SuiteOptions opt;
  opt.max_l = 5;
  opt.max_k = 2;
  opt.max_points = 20;
  opt.budget = 18;
  std::size_t skipped = 0;
  for (const VerificationReport& r : run_suite("theorem-i", opt)) {
    EXPECT_NE(r.status, Status::fail);
    if (r.status == Status::skipped) ++skipped;
  }
  EXPECT_GE(skipped, 1u);
}

TEST(Report, JsonSchema) {
  VerificationReport r;
  r.suite = "demo";
  r.params = {{"l", 2}};
  nlohmann::json j = to_json(r);
  EXPECT_EQ(j.at("suite"), "demo");
  EXPECT_EQ(j.at("status"), "pass");
  EXPECT_FALSE(j.contains("counterexample"));
  EXPECT_FALSE(j.contains("details"));

  r.status = Status::fail;
  r.counterexample = Counterexample{"(0..1)", "x", "y"};
  r.details = {{"edges", 3}};
  j = to_json(r);
  EXPECT_EQ(j.at("status"), "fail");
  EXPECT_EQ(j.at("counterexample").at("input"), "(0..1)");
  EXPECT_EQ(j.at("counterexample").at("expected"), "x");
  EXPECT_EQ(j.at("counterexample").at("actual"), "y");
  EXPECT_EQ(j.at("details").at("edges"), 3);

  EXPECT_STREQ(to_string(Status::pass), "pass");
  EXPECT_STREQ(to_string(Status::fail), "fail");
  EXPECT_STREQ(to_string(Status::skipped), "skipped");
}

TEST(Report, SkippedIsNeverPassed) {
  VerificationReport r;
  r.status = Status::skipped;
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(to_json(r).at("status"), "skipped");
}

}  // namespace
