#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "ffsubsum/verify.hpp"

using namespace ffsubsum;
using namespace ffsubsum::verify;

TEST(Verify, SummaryBookkeeping) {
  Summary s;
  s.expect(true, "a");
  s.expect(false, "b");
  EXPECT_EQ(s.checks, 2u);
  EXPECT_EQ(s.failed, 1u);
  ASSERT_EQ(s.failures.size(), 1u);
  EXPECT_EQ(s.failures[0], "b");
  Summary t;
  for (int i = 0; i < 100; ++i) t.expect(false, "x");
  s.merge(t);
  EXPECT_EQ(s.failed, 101u);
  EXPECT_EQ(s.failures.size(), Summary::kMaxMessages);
  EXPECT_FALSE(s.ok());
}

TEST(Verify, FieldHelpers) {
  EXPECT_EQ(prime_powers(2, 16), (std::vector<std::uint32_t>{2, 3, 4, 5, 7, 8, 9, 11, 13, 16}));
  EXPECT_EQ(field_of_order(27).p(), 3u);
  EXPECT_EQ(field_of_order(27).e(), 3u);
  EXPECT_THROW(field_of_order(12), std::invalid_argument);
}

TEST(Verify, CanonicalSets) {
  const Field f = field_of_order(9);
  EXPECT_EQ(canonical_exclusion_sets(f, 0).size(), 1u);
  EXPECT_EQ(canonical_exclusion_sets(f, 1).size(), 9u);
  EXPECT_EQ(canonical_exclusion_sets(f, 2, 100).size(), 36u);
  const auto some = canonical_exclusion_sets(f, 3, 10);
  ASSERT_EQ(some.size(), 10u);
  std::set<std::vector<Code>> distinct;
  for (const ExclusionSet& s : some) {
    std::vector<Code> codes;
    for (const Element& x : s.excluded()) codes.push_back(x.code());
    distinct.insert(codes);
  }
  EXPECT_EQ(distinct.size(), 10u);
  EXPECT_EQ(*distinct.begin(), (std::vector<Code>{0, 1, 2}));
}

TEST(Verify, GridPassesOnSmallFields) {
  for (std::uint32_t q : {4u, 5u, 7u, 9u}) {
    const Summary s = check_oracle_grid(field_of_order(q), 3, 6);
    EXPECT_TRUE(s.ok()) << q << ": " << (s.failures.empty() ? "" : s.failures[0]);
    EXPECT_GT(s.checks, 0u);
  }
}

TEST(Verify, HarnessCatchesCorruptedCounts) {
  const CountFn bad = [](ExclusionCounter& c, std::uint64_t k, const Element& b) -> BigInt {
    BigInt n = c.count(k, b).n;
    if (k == 1 && b.code() == 1) n += 1;
    return n;
  };
  const Summary s = check_oracle_grid(field_of_order(5), 2, 4, bad);
  EXPECT_FALSE(s.ok());
  EXPECT_GT(s.failed, 0u);
}

TEST(Verify, IdentityGroupsPass) {
  EXPECT_TRUE(check_binomial_identities().ok());
  for (std::uint32_t q : {4u, 5u, 8u, 9u, 25u}) {
    const Field f = field_of_order(q);
    EXPECT_TRUE(check_sequences(f).ok()) << q;
    EXPECT_TRUE(check_m_relations(f).ok()) << q;
    EXPECT_TRUE(check_symmetry(f).ok()) << q;
    EXPECT_TRUE(check_small_k_values(f).ok()) << q;
    EXPECT_TRUE(check_sharpness(f).ok()) << q;
    EXPECT_TRUE(check_existence(f).ok()) << q;
    EXPECT_TRUE(check_oracle_order(f, 1).ok()) << q;
  }
}

// N(q-1, 0, F_q*) = 1 follows N(q-2, 0, F_q*) = N(1, 0, F_q*) = 0, so the
// literal unimodality check fails on every field.
TEST(Verify, UnimodalityFailsOnPuncturedField) {
  const Summary s = check_unimodality(field_of_order(7));
  EXPECT_FALSE(s.ok());
}

TEST(Verify, GuaranteedScanDimensions) {
  EXPECT_EQ(guaranteed_scan_dimensions(field_of_order(7), EvalMode::full), (std::vector<std::size_t>{1, 2, 3, 4, 5}));
  EXPECT_EQ(guaranteed_scan_dimensions(field_of_order(7), EvalMode::punctured), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(guaranteed_scan_dimensions(field_of_order(8), EvalMode::full), (std::vector<std::size_t>{2, 3, 4}));
  EXPECT_EQ(guaranteed_scan_dimensions(field_of_order(8), EvalMode::punctured), (std::vector<std::size_t>{2, 3}));
}

TEST(Verify, RunAllLogsEachGroup) {
  Options opts;
  opts.max_q = 5;
  opts.inequalities = false;
  std::ostringstream log;
  const Summary s = run_all(opts, log);
  EXPECT_TRUE(s.ok());
  EXPECT_NE(log.str().find("ok   "), std::string::npos);
  EXPECT_EQ(log.str().find("FAIL"), std::string::npos);
}
