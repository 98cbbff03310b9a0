#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "mulideal/arithmetic.hpp"
#include "mulideal/errors.hpp"
#include "mulideal/factor.hpp"

namespace mulideal {
namespace {

HomogeneousMonomialIdeal hom(std::vector<ExponentVector> gens) {
  return HomogeneousMonomialIdeal::from_generators(std::move(gens));
}

const HomogeneousMonomialIdeal kLine12 = hom({{0, 1, 0}, {0, 0, 1}});

TEST(Factor, PrimesAndFactorizations) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(1000000007));
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  EXPECT_TRUE(is_prime(18446744073709551557ULL));
  EXPECT_EQ(factorize(360), (std::vector<std::pair<std::uint64_t, int>>{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_EQ(factorize(1000000007ULL * 998244353ULL),
            (std::vector<std::pair<std::uint64_t, int>>{{998244353, 1}, {1000000007, 1}}));
  EXPECT_TRUE(factorize(1).empty());
  EXPECT_EQ(valuation(-72, 2), 3);
  EXPECT_EQ(valuation(7, 3), 0);
}

TEST(Factor, PropertyFactorizationMultipliesBack) {
  testing::Gen gen(41);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::uint64_t>(gen.uniform(2, 1'000'000'000'000LL));
    std::uint64_t prod = 1;
    for (auto [p, e] : factorize(n)) {
      EXPECT_TRUE(is_prime(p));
      for (int k = 0; k < e; ++k) prod *= p;
    }
    EXPECT_EQ(prod, n);
  }
}

TEST(Places, ParseAndValidate) {
  const auto s = PlaceSet::parse("inf,3,2");
  EXPECT_TRUE(s.infinity);
  EXPECT_EQ(s.primes, (std::set<std::uint64_t>{2, 3}));
  EXPECT_EQ(s.to_string(), "inf,2,3");
  EXPECT_THROW(PlaceSet::parse("inf,4"), std::invalid_argument);
  EXPECT_THROW(Place::prime(1), std::invalid_argument);
  EXPECT_FALSE(PlaceSet::parse("5").infinity);
  EXPECT_EQ(Place::prime(7).to_string(), "7");
  EXPECT_EQ(Place::infinity().to_string(), "inf");
}

TEST(RationalPoint, Normalizes) {
  EXPECT_EQ(RationalPoint({4, 6, 10}).coords(), (std::vector<std::int64_t>{2, 3, 5}));
  EXPECT_EQ(RationalPoint({0, -2, 4}).coords(), (std::vector<std::int64_t>{0, 1, -2}));
  EXPECT_EQ(RationalPoint::parse("1,3,6").to_string(), "1,3,6");
  EXPECT_THROW(RationalPoint({0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(RationalPoint({5}), std::invalid_argument);
}

TEST(HomogeneousIdeal, ConstructionAndCharts) {
  EXPECT_THROW(hom({{1, 0, 0}, {0, 2, 0}}), std::invalid_argument);
  const auto a = homogenize(MonomialIdeal::minimalize({{2, 0}, {1, 1}, {0, 2}}));
  EXPECT_EQ(a.degree(), 2);
  EXPECT_EQ(dehomogenize(a, 0), MonomialIdeal::minimalize({{2, 0}, {1, 1}, {0, 2}}));
  const auto b = hom({{0, 2, 0}, {1, 0, 1}});
  EXPECT_EQ(dehomogenize(b, 2), MonomialIdeal::minimalize({{0, 2}, {1, 0}}));
  EXPECT_EQ(b.raise_degree(1).degree(), 3);
  EXPECT_TRUE((b + kLine12).contains(b));
  EXPECT_TRUE(kLine12.contains(b.raise_degree(2)));
  EXPECT_FALSE(b.contains(kLine12));
  EXPECT_TRUE(HomogeneousMonomialIdeal::unit(2).is_unit());
}

TEST(Weil, ValuesMatchOracle) {
  const RationalPoint p({1, 3, 6});
  EXPECT_EQ(weil_local(kLine12, p, Place::infinity()).archimedean, 0.0);
  EXPECT_EQ(weil_local(kLine12, p, Place::prime(3)).multiplicity, 1);
  EXPECT_EQ(weil_local(kLine12, p, Place::prime(2)).multiplicity, 0);
  EXPECT_NEAR(weil_local(kLine12, RationalPoint({9, 1, 2}), Place::infinity()).value(), std::log(4.5), 1e-15);
  const auto b = hom({{0, 2, 0}, {1, 0, 1}});
  EXPECT_NEAR(weil_local(b, RationalPoint({5, 1, 3}), Place::infinity()).value(), std::log(5.0 / 3.0), 1e-15);
  EXPECT_EQ(weil_local(b, RationalPoint({1, 2, 2}), Place::prime(2)).multiplicity, 1);
  EXPECT_EQ(weil_local(b, RationalPoint({1, 2, 2}), Place::infinity()).value(), 0.0);
}

TEST(Weil, PointOnZeroSetIsADomainError) {
  try {
    weil_local(kLine12, RationalPoint({1, 0, 0}), Place::infinity());
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.kind(), "point_on_zero_set");
  }
}

TEST(Functions, ProximityCountingHeightExamples) {
  const RationalPoint p({1, 3, 6});
  const PlaceSet inf_only;
  EXPECT_EQ(proximity(kLine12, p, inf_only).value(), 0.0);
  const auto n = counting(kLine12, p, inf_only);
  EXPECT_EQ(n.finite, (std::map<std::uint64_t, std::int64_t>{{3, 1}}));
  const auto b = hom({{0, 2, 0}, {1, 0, 1}});
  EXPECT_NEAR(counting(b, RationalPoint({1, 2, 2}), inf_only).value(), std::log(2.0), 1e-15);
  EXPECT_EQ(truncated_counting(kLine12.raise_degree(0), RationalPoint({1, 9, 18}), inf_only).finite,
            (std::map<std::uint64_t, std::int64_t>{{3, 1}}));
  EXPECT_THROW(proximity(kLine12, p, PlaceSet::parse("3")), std::invalid_argument);
  EXPECT_NEAR(weil_height(RationalPoint({1, -7, 3})), std::log(7.0), 1e-15);
  EXPECT_NEAR(height_class(-3, RationalPoint({1, 2, 4})), -3 * std::log(4.0), 1e-14);
  EXPECT_EQ(height_ideal(HomogeneousMonomialIdeal::unit(2), RationalPoint({5, 7, 11})).value(), 0.0);
}

struct Sample {
  HomogeneousMonomialIdeal a;
  HomogeneousMonomialIdeal b;
};

std::vector<Sample> ideal_pairs(testing::Gen& gen, int count) {
  std::vector<Sample> out;
  while (static_cast<int>(out.size()) < count) {
    const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 3));
    out.push_back({gen.homogeneous(n, gen.uniform(1, 3), 3), gen.homogeneous(n, gen.uniform(1, 3), 3)});
  }
  return out;
}

TEST(Weil, PropertyMinRuleAndMonotonicity) {
  testing::Gen gen(42);
  const auto pairs = ideal_pairs(gen, 20);
  for (const auto& [a, b] : pairs) {
    const auto sum = a + b;
    for (int k = 0; k < 25; ++k) {
      const auto p = gen.point(a.ambient_dim() + 1, 500, true);
      const auto q = gen.prime();
      const auto v = Place::prime(q);
      const auto la = weil_local(a, p, v).multiplicity;
      const auto lb = weil_local(b, p, v).multiplicity;
      EXPECT_EQ(weil_local(sum, p, v).multiplicity, std::min(la, lb));
      const double ia = weil_local(a, p, Place::infinity()).archimedean;
      const double ib = weil_local(b, p, Place::infinity()).archimedean;
      EXPECT_NEAR(weil_local(sum, p, Place::infinity()).archimedean, std::min(ia, ib), 1e-12);
      // a in a + b
      EXPECT_GE(la, weil_local(sum, p, v).multiplicity);
      EXPECT_GE(ia + 1e-12, weil_local(sum, p, Place::infinity()).archimedean);
    }
  }
}

TEST(Weil, PropertySplitOverPlacesAndTruncation) {
  testing::Gen gen(43);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 3));
    const auto a = gen.homogeneous(n, gen.uniform(1, 3), 3);
    const auto p = gen.point(n + 1, 1000, true);
    PlaceSet s;
    for (int k = 0; k < 2; ++k) s.primes.insert(gen.prime());
    const auto m = proximity(a, p, s);
    const auto nn = counting(a, p, s);
    const auto h = height_ideal(a, p);
    EXPECT_EQ((m + nn).finite, h.finite);
    EXPECT_NEAR(m.archimedean + nn.archimedean, h.archimedean, 1e-9);
    const auto n1 = truncated_counting(a, p, s);
    EXPECT_LE(n1.value(), nn.value() + 1e-12);
    for (const auto& [q, mult] : n1.finite) EXPECT_EQ(mult, 1);
    // raising the degree does not change the Weil function
    EXPECT_EQ(height_ideal(a.raise_degree(2), p).finite, h.finite);
  }
}

TEST(LogSum, ArithmeticKeepsFinitePartExact) {
  LogSum a;
  a.add_finite(3, 2);
  a.archimedean = 1.5;
  LogSum b;
  b.add_finite(3, 2);
  b.add_finite(5, 1);
  const auto d = a - b;
  EXPECT_EQ(d.finite, (std::map<std::uint64_t, std::int64_t>{{5, -1}}));
  EXPECT_NEAR(d.value(), 1.5 - std::log(5.0), 1e-15);
  EXPECT_EQ(a.scaled(-2).finite, (std::map<std::uint64_t, std::int64_t>{{3, -4}}));
}

}  // namespace
}  // namespace mulideal
