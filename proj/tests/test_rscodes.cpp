#include <gtest/gtest.h>

#include "ffsubsum/errors.hpp"
#include "ffsubsum/oracle.hpp"
#include "ffsubsum/rscodes.hpp"
#include "gen.hpp"

using namespace ffsubsum;

namespace {

Poly poly(const Field& f, std::initializer_list<Code> cs) {
  std::vector<Element> v;
  for (Code c : cs) v.push_back(f.from_code(c));
  return Poly(f, v);
}

Poly random_poly(gen::Gen& g, const Field& f, std::size_t len) {
  std::vector<Element> v;
  for (std::size_t i = 0; i < len; ++i) v.push_back(g.element(f));
  return Poly(f, v);
}

}  // namespace

TEST(Poly, DegreeAndTrim) {
  const Field f = Field::make(5, 1);
  EXPECT_EQ(poly(f, {1, 2, 0, 0}).degree(), Degree(1));
  EXPECT_EQ(poly(f, {0, 0}).degree(), std::nullopt);
  EXPECT_TRUE(Poly(f).is_zero());
  EXPECT_LT(Degree(), Degree(0));
  EXPECT_EQ(poly(f, {1, 2, 3})(f.from_code(2)), f.from_code(2));  // 1 + 4 + 12
}

TEST(RSCode, EncodeExample) {
  const Field f = Field::make(7, 1);
  const RSCode code = RSCode::over(f, EvalMode::punctured, 2);
  EXPECT_EQ(code.n(), 6u);
  const Word w = code.encode(poly(f, {1, 2}));
  EXPECT_EQ(code.format_word(w), "3,5,0,2,4,6");
  EXPECT_TRUE(code.is_codeword(w));
  EXPECT_EQ(code.word_degree(w), Degree(1));
  EXPECT_THROW(code.encode(poly(f, {1, 2, 3})), std::invalid_argument);
}

TEST(RSCode, InvalidConstruction) {
  const Field f = Field::make(5, 1);
  EXPECT_THROW(RSCode(f, {f.one(), f.one()}, 1), std::invalid_argument);
  EXPECT_THROW(RSCode::over(f, EvalMode::full, 0), std::invalid_argument);
  EXPECT_THROW(RSCode::over(f, EvalMode::punctured, 5), std::invalid_argument);
  const RSCode code = RSCode::over(f, EvalMode::full, 2);
  EXPECT_THROW(code.parse_word("1,2,3"), std::invalid_argument);
}

TEST(RSCode, InterpolationRoundTrip) {
  gen::Gen g(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Field f = g.field(32);
    const EvalMode mode = g.below(2) ? EvalMode::full : EvalMode::punctured;
    const std::size_t n = mode == EvalMode::full ? f.q() : f.q() - 1;
    if (n < 2) continue;
    const RSCode code = RSCode::over(f, mode, 1 + g.below(n - 1));
    const Poly p = random_poly(g, f, 1 + g.below(n));
    const Word u = code.evaluate(p);
    ASSERT_EQ(code.interpolate(u), p);
    ASSERT_EQ(code.is_codeword(u), p.degree() < Degree(code.k()));
  }
}

TEST(RSCode, ZeroWordHasMinusInfinityDegree) {
  const Field f = Field::make(7, 1);
  const RSCode code = RSCode::over(f, EvalMode::full, 3);
  const Word zero{std::vector<Element>(7, f.zero())};
  EXPECT_EQ(code.word_degree(zero), std::nullopt);
  EXPECT_TRUE(code.is_codeword(zero));
  EXPECT_EQ(code.distance_to_code(zero), 0u);
}

TEST(RSCode, MinimumDistanceIsSingleton) {
  for (auto [p, e] : {std::pair{5u, 1u}, {7u, 1u}, {2u, 2u}, {2u, 3u}}) {
    const Field f = Field::make(p, e);
    for (EvalMode mode : {EvalMode::full, EvalMode::punctured}) {
      for (std::size_t k = 1; k <= 2; ++k) {
        const RSCode code = RSCode::over(f, mode, k);
        EXPECT_EQ(code.minimum_distance(), code.n() - k + 1) << "q=" << f.q() << " k=" << k;
      }
    }
  }
}

TEST(RSCode, DegreeKWordsAreDeepHoles) {
  gen::Gen g(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Field f = g.field(9);
    if (f.q() < 4) continue;
    const RSCode code = RSCode::over(f, EvalMode::full, 1 + g.below(2));
    std::vector<Element> c = g.distinct(f, code.k() + 1);
    c.back() = g.nonzero(f);
    const Word u = code.evaluate(Poly(f, c));
    ASSERT_EQ(code.classify_m1(u), Verdict::deep_hole);
    ASSERT_EQ(code.distance_to_code(u), code.n() - code.k());
  }
}

// over F_7*, k = 4: x^5 has root sum 0 and no 5-subset of F_7* sums to 0
TEST(RSCode, ClassifyExamples) {
  const Field f = Field::make(7, 1);
  const RSCode code = RSCode::over(f, EvalMode::punctured, 4);
  const Word hole = code.evaluate(poly(f, {0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(code.root_sum_target(hole), f.zero());
  EXPECT_EQ(code.classify_m1(hole), Verdict::deep_hole);
  EXPECT_EQ(code.distance_to_code(hole), 2u);
  const Word plain = code.evaluate(poly(f, {0, 0, 0, 0, 1, 1}));
  EXPECT_EQ(code.root_sum_target(plain), f.from_code(6));
  EXPECT_EQ(code.classify_m1(plain), Verdict::ordinary);
  EXPECT_EQ(code.distance_to_code(plain), 1u);
  const Word codeword = code.evaluate(poly(f, {1, 1}));
  EXPECT_THROW(code.classify_m1(codeword), std::invalid_argument);
  EXPECT_THROW(code.root_sum_target(codeword), std::invalid_argument);
}

TEST(RSCode, ClassificationMatchesDistance) {
  gen::Gen g(7);
  for (int trial = 0; trial < 60; ++trial) {
    const Field f = g.field(9);
    if (f.q() < 4) continue;
    const EvalMode mode = g.below(2) ? EvalMode::full : EvalMode::punctured;
    const RSCode code = RSCode::over(f, mode, 1 + g.below(2));
    if (code.k() + 2 > code.n()) continue;
    std::vector<Element> c;
    for (std::size_t i = 0; i <= code.k() + 1; ++i) c.push_back(g.element(f));
    c.back() = g.nonzero(f);
    const Word u = code.evaluate(Poly(f, c));
    const std::size_t d = code.distance_to_code(u);
    ASSERT_EQ(code.classify_m1(u) == Verdict::deep_hole, d == code.n() - code.k());
    const DistanceBounds b = code.theorem_5_1_bounds(u);
    ASSERT_FALSE(b.codeword);
    ASSERT_LE(b.lower, d);
    ASSERT_LE(d, b.upper);
  }
}

TEST(RSCode, DistanceInvariances) {
  gen::Gen g(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Field f = g.field(9);
    if (f.q() < 4) continue;
    const RSCode code = RSCode::over(f, EvalMode::full, 2);
    const Word u = code.evaluate(random_poly(g, f, f.q()));
    const std::size_t d = code.distance_to_code(u);
    const Element a = g.nonzero(f);
    Word scaled = u;
    for (Element& x : scaled.values) x = a * x;
    ASSERT_EQ(code.distance_to_code(scaled), d);
    const Word v = code.encode(random_poly(g, f, 2));
    Word shifted = u;
    for (std::size_t i = 0; i < u.values.size(); ++i) shifted.values[i] = u.values[i] + v.values[i];
    ASSERT_EQ(code.distance_to_code(shifted), d);
    ASSERT_EQ(code.distance_to_code_serial(u), d);
  }
}

TEST(RSCode, DistanceGuard) {
  const Field f = Field::make(2, 7);
  const RSCode code = RSCode::over(f, EvalMode::full, 5);
  const Word zero{std::vector<Element>(f.q(), f.zero())};
  EXPECT_THROW(code.distance_to_code(zero), GuardExceeded);
  EXPECT_THROW(code.distance_to_code(zero, 1000), GuardExceeded);
}

TEST(Scan, NoDeepHolesInGuaranteedRange) {
  const ScanReport r = deep_hole_scan(Field::make(7, 1), EvalMode::punctured, 3, ScanOptions{true});
  EXPECT_EQ(r.n, 6u);
  EXPECT_EQ(r.entries.size(), 7u);
  EXPECT_EQ(r.deep_holes, 0u);
  for (const ScanEntry& e : r.entries) EXPECT_EQ(e.exhaustive_deep_hole, std::optional<bool>(false));
}

TEST(Scan, DeepHoleOutsideRange) {
  const Field f = Field::make(7, 1);
  const ScanReport r = deep_hole_scan(f, EvalMode::punctured, 4, ScanOptions{true});
  EXPECT_EQ(r.deep_holes, 1u);
  for (const ScanEntry& e : r.entries) {
    EXPECT_EQ(e.deep_hole, e.b1.is_zero());
    EXPECT_EQ(e.exhaustive_deep_hole, std::optional<bool>(e.deep_hole));
    EXPECT_EQ(e.solutions, dp_count_table(ExclusionSet(f, {f.zero()})).at(5, e.b1));
  }
}

TEST(Scan, Guards) {
  const Field f = Field::make(7, 1);
  EXPECT_THROW(deep_hole_scan(f, EvalMode::punctured, 5), std::invalid_argument);
  EXPECT_THROW(deep_hole_scan(f, EvalMode::full, 3, ScanOptions{true, 1000}), GuardExceeded);
  EXPECT_NO_THROW(deep_hole_scan(f, EvalMode::full, 3, ScanOptions{false, 1000}));
}
