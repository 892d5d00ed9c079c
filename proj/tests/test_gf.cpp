#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

#include "ffsubsum/gf.hpp"
#include "gen.hpp"

using namespace ffsubsum;

namespace {

std::uint64_t order_of(const Field& f, Code a) {
  std::uint64_t n = 1;
  for (Code x = a; x != 1; x = f.mul(x, a)) ++n;
  return n;
}

}  // namespace

TEST(Field, PrimeFieldBasics) {
  const Field f5 = Field::make(5, 1);
  EXPECT_EQ(f5.q(), 5u);
  EXPECT_EQ(f5.generator().code(), 2u);
  EXPECT_EQ(f5.add(3, 4), 2u);
  EXPECT_EQ(f5.inv(2), 3u);

  const Field f2 = Field::make(2, 1);
  EXPECT_EQ(f2.q(), 2u);
  EXPECT_EQ(f2.generator().code(), 1u);
}

TEST(Field, GeneratorIsLeastPrimitive) {
  for (auto [p, e] : {std::pair{3u, 1u}, {7u, 1u}, {2u, 3u}, {3u, 2u}, {2u, 4u}, {5u, 2u}, {2u, 7u}}) {
    const Field f = Field::make(p, e);
    const Code g = f.generator().code();
    EXPECT_EQ(order_of(f, g), f.q() - 1) << "q=" << f.q();
    for (Code c = 1; c < g; ++c) EXPECT_LT(order_of(f, c), f.q() - 1) << "q=" << f.q() << " c=" << c;
  }
}

TEST(Field, F128Generator) {
  const Field f = Field::make(2, 7);
  ASSERT_EQ(f.q(), 128u);
  const Element g = f.generator();
  EXPECT_EQ(g * g.pow(126), f.one());
  EXPECT_FALSE(in_prime_subfield(g));
  EXPECT_NE(g * g, g);
}

TEST(Field, TablesMatchReferenceProduct) {
  for (auto [p, e] : {std::pair{2u, 1u}, {5u, 1u}, {2u, 3u}, {3u, 2u}, {2u, 4u}, {5u, 2u}, {3u, 3u}, {2u, 5u}}) {
    const Field f = Field::make(p, e);
    for (Code a = 0; a < f.q(); ++a) {
      for (Code b = 0; b < f.q(); ++b) ASSERT_EQ(f.mul(a, b), f.mul_reference(a, b)) << a << "*" << b;
    }
  }
}

TEST(Field, AdditionIsCoordinatewise) {
  const Field f = Field::make(3, 3);
  for (Code a = 0; a < f.q(); ++a) {
    for (Code b = 0; b < f.q(); ++b) {
      const auto ca = f.coords(a);
      const auto cb = f.coords(b);
      std::vector<Residue> sum(ca.size());
      for (std::size_t i = 0; i < ca.size(); ++i) sum[i] = (ca[i] + cb[i]) % 3;
      ASSERT_EQ(f.add(a, b), f.encode(sum));
      ASSERT_EQ(f.sub(f.add(a, b), b), a);
    }
  }
}

TEST(Field, FieldAxiomsOnRandomTriples) {
  gen::Gen gen(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const Field f = gen.field(128);
    const Element a = gen.element(f);
    const Element b = gen.element(f);
    const Element c = gen.element(f);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a + (-a), f.zero());
    if (!a.is_zero()) {
      ASSERT_EQ(a * a.inv(), f.one());
    }
    ASSERT_EQ(static_cast<std::int64_t>(f.p()) * a, f.zero());
  }
}

TEST(Field, InverseOfZeroThrows) {
  const Field f = Field::make(7, 1);
  EXPECT_THROW(f.zero().inv(), std::domain_error);
  EXPECT_THROW(f.inv(0), std::domain_error);
}

TEST(Field, MixedFieldsThrow) {
  const Field a = Field::make(2, 3);
  const Field b = Field::make(3, 2);
  EXPECT_THROW(a.one() + b.one(), std::invalid_argument);
  EXPECT_THROW(a.one() * b.one(), std::invalid_argument);
}

TEST(Field, InvalidParameters) {
  EXPECT_THROW(Field::make(4, 1), std::invalid_argument);
  EXPECT_THROW(Field::make(3, 0), std::invalid_argument);
  EXPECT_THROW(Field::make(2, 11, 1024), std::invalid_argument);
  EXPECT_NO_THROW(Field::make(2, 10, 1024));
}

TEST(Field, MaxQFromEnvironment) {
  ::setenv("FFSUBSUM_MAX_Q", "100", 1);
  EXPECT_EQ(default_max_q(), 100u);
  EXPECT_THROW(Field::make(2, 7), std::invalid_argument);
  ::setenv("FFSUBSUM_MAX_Q", "garbage", 1);
  EXPECT_EQ(default_max_q(), 1u << 20);
  ::unsetenv("FFSUBSUM_MAX_Q");
  EXPECT_NO_THROW(Field::make(2, 7));
}

TEST(Field, FromIntIsInPrimeSubfield) {
  const Field f = Field::make(3, 2);
  EXPECT_EQ(f.from_int(4), f.one());
  EXPECT_EQ(f.from_int(-1), f.from_code(2));
  for (std::int64_t n = -10; n <= 10; ++n) EXPECT_TRUE(in_prime_subfield(f.from_int(n)));
}

TEST(Subfield, Membership) {
  const Field f5 = Field::make(5, 1);
  EXPECT_TRUE(in_prime_subfield(f5.from_code(3)));
  EXPECT_EQ(prime_residue(f5.from_code(3)), 3u);
  const Field f8 = Field::make(2, 3);
  EXPECT_TRUE(in_prime_subfield(f8.zero()));
  EXPECT_EQ(prime_residue(f8.zero()), 0u);
  EXPECT_THROW(prime_residue(f8.generator()), std::invalid_argument);
  std::size_t inside = 0;
  const Field f27 = Field::make(3, 3);
  for (const Element& x : f27.elements()) inside += in_prime_subfield(x);
  EXPECT_EQ(inside, 3u);
}

TEST(Subfield, Rank) {
  const Field f = Field::make(2, 7);
  const Element w = f.generator();
  const std::vector<Element> v{f.one(), w, w.pow(2), w.pow(3)};
  EXPECT_EQ(fp_rank(v), 4u);
  EXPECT_EQ(fp_rank(std::vector<Element>{}), 0u);

  const Field f25 = Field::make(5, 2);
  const Element x = f25.gen_pow(7);
  EXPECT_EQ(fp_rank(std::vector<Element>{x, 2 * x}), 1u);
  EXPECT_EQ(fp_rank(std::vector<Element>{f25.zero()}), 0u);
}

TEST(Text, ParseForms) {
  const Field f7 = Field::make(7, 1);
  EXPECT_EQ(parse_element("3", f7), f7.from_code(3));
  EXPECT_THROW(parse_element("7", f7), std::invalid_argument);
  const Field f8 = Field::make(2, 3);
  EXPECT_EQ(parse_element("g^5", f8), f8.generator().pow(5));
  const std::vector<Residue> c{1, 0, 1};
  EXPECT_EQ(parse_element("[1,0,1]", f8), f8.from_coords(c));
  EXPECT_EQ(parse_element("0", f8), f8.zero());
  EXPECT_EQ(parse_element(" [1, 1, 0] ", f8).coords(), (std::vector<Residue>{1, 1, 0}));
}

TEST(Text, Malformed) {
  const Field f8 = Field::make(2, 3);
  for (const char* bad : {"", "x", "g^", "g^-1", "[1,0]", "[1,0,2]", "[1,0,1", "2", "1.0"}) {
    EXPECT_THROW(parse_element(bad, f8), std::invalid_argument) << bad;
  }
}

TEST(Text, RoundTrip) {
  for (auto [p, e] : {std::pair{2u, 1u}, {13u, 1u}, {2u, 4u}, {3u, 3u}, {5u, 2u}}) {
    const Field f = Field::make(p, e);
    for (const Element& x : f.elements()) ASSERT_EQ(parse_element(format_element(x), f), x);
    const auto all = f.elements();
    EXPECT_EQ(parse_element_list(format_element_list(all), f), all);
  }
}

TEST(Text, Lists) {
  const Field f8 = Field::make(2, 3);
  EXPECT_TRUE(parse_element_list("", f8).empty());
  const auto xs = parse_element_list("0,g^1,[1,1,0], 1", f8);
  ASSERT_EQ(xs.size(), 4u);
  EXPECT_EQ(xs[1], f8.generator());
  EXPECT_EQ(xs[3], f8.one());
}
