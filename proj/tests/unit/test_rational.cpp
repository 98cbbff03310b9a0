#include <gtest/gtest.h>

#include "generators.hpp"
#include "mulideal/errors.hpp"
#include "mulideal/monomial_ideal.hpp"
#include "mulideal/rational.hpp"

namespace mulideal {
namespace {

TEST(Rational, ParsesCanonicalForms) {
  EXPECT_EQ(parse_rational("5/6"), make_rational(5, 6));
  EXPECT_EQ(parse_rational("-3"), make_rational(-3));
  EXPECT_EQ(parse_rational("4/6"), make_rational(2, 3));
  EXPECT_EQ(parse_rational("0/7"), make_rational(0));
  EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
  EXPECT_EQ(to_string(parse_rational("-8/4")), "-2");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "1/-2", "a", "1.5", "1/", "/2", "1//2", "1 2"}) {
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
  }
}

TEST(Rational, FloorCeilAndConversions) {
  EXPECT_EQ(floor(make_rational(-7, 2)), -4);
  EXPECT_EQ(ceil(make_rational(-7, 2)), -3);
  EXPECT_EQ(floor(make_rational(6, 3)), 2);
  EXPECT_EQ(ceil(make_rational(6, 3)), 2);
  EXPECT_DOUBLE_EQ(to_double(make_rational(1, 4)), 0.25);
  EXPECT_TRUE(fits_int64(Integer("9223372036854775807")));
  EXPECT_FALSE(fits_int64(Integer("9223372036854775808")));
  EXPECT_THROW(to_int64(Integer("9223372036854775808")), std::overflow_error);
  EXPECT_THROW(make_rational(1, 0), std::invalid_argument);
}

TEST(MonomialIdeal, MinimalizeKeepsAntichain) {
  const auto a = MonomialIdeal::minimalize({{2, 1}, {1, 1}, {0, 3}, {1, 1}, {0, 4}});
  EXPECT_EQ(a.generators(), (std::vector<ExponentVector>{{0, 3}, {1, 1}}));
  EXPECT_EQ(a.dim(), 2u);
  EXPECT_FALSE(a.is_unit());
  EXPECT_TRUE(MonomialIdeal::minimalize({{3, 3}, {0, 0}}).is_unit());
}

TEST(MonomialIdeal, RejectsBadInput) {
  EXPECT_THROW(MonomialIdeal::minimalize({}), DomainError);
  try {
    MonomialIdeal::minimalize({});
  } catch (const DomainError& e) {
    EXPECT_EQ(e.kind(), "zero_ideal");
  }
  EXPECT_THROW(MonomialIdeal::minimalize({{1, 0}, {1}}), std::invalid_argument);
  EXPECT_THROW(MonomialIdeal::minimalize({{-1, 0}}), std::invalid_argument);
}

TEST(MonomialIdeal, Operations) {
  const auto m = MonomialIdeal::minimalize({{1, 0}, {0, 1}});
  EXPECT_EQ(m.power(2), MonomialIdeal::minimalize({{2, 0}, {1, 1}, {0, 2}}));
  EXPECT_EQ(m.power(0), MonomialIdeal::unit(2));
  EXPECT_EQ(MonomialIdeal::principal({2, 0}) + MonomialIdeal::principal({0, 3}),
            MonomialIdeal::minimalize({{2, 0}, {0, 3}}));
  EXPECT_EQ(MonomialIdeal::principal({1, 0}) * m, MonomialIdeal::minimalize({{2, 0}, {1, 1}}));
  EXPECT_TRUE(m.contains(std::vector<std::int64_t>{3, 0}));
  EXPECT_FALSE(m.contains(std::vector<std::int64_t>{0, 0}));
  EXPECT_TRUE(m.contains(m.power(3)));
  EXPECT_FALSE(m.power(3).contains(m));
  EXPECT_EQ(MonomialIdeal::minimalize({{2, 0}, {0, 3}}).max_exponents(), (ExponentVector{2, 3}));
}

TEST(MonomialIdeal, PropertyGeneratorsFormAntichainAndGenerateSameIdeal) {
  testing::Gen gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t dim = static_cast<std::size_t>(gen.uniform(1, 4));
    std::vector<ExponentVector> raw;
    const auto count = gen.uniform(1, 8);
    for (int i = 0; i < count; ++i) raw.push_back(gen.exponents(dim, 5));
    const auto a = MonomialIdeal::minimalize(raw);
    const auto& g = a.generators();
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (i != j) EXPECT_FALSE(divides(g[i], g[j]));
      }
    }
    for (const auto& r : raw) EXPECT_TRUE(a.contains(r));
    EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
  }
}

TEST(MonomialIdeal, PropertySumAndProductContainment) {
  testing::Gen gen(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = gen.ideal(3, 4, 4);
    const auto b = gen.ideal(3, 4, 4);
    EXPECT_TRUE((a + b).contains(a));
    EXPECT_TRUE((a + b).contains(b));
    EXPECT_TRUE(a.contains(a * b));
    EXPECT_TRUE(b.contains(a * b));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
  }
}

}  // namespace
}  // namespace mulideal
