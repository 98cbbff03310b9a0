#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "mulideal/blowup.hpp"
#include "mulideal/conjecture.hpp"
#include "mulideal/errors.hpp"
#include "mulideal/sheaf.hpp"

namespace mulideal {
namespace {

Polynomial poly(std::initializer_list<long> coeffs) {
  std::vector<GaussianRational> c;
  for (long v : coeffs) c.emplace_back(Rational(v));
  return Polynomial(std::move(c));
}

HomogeneousMonomialIdeal hom(std::vector<ExponentVector> gens) {
  return HomogeneousMonomialIdeal::from_generators(std::move(gens));
}

const PolynomialCurve& veronese() {
  static const PolynomialCurve f({poly({1}), poly({0, 1}), poly({0, 0, 1})});
  return f;
}

std::vector<RationalPoint> sample(std::uint64_t seed, std::size_t coords, int count, std::int64_t height,
                                  bool nonzero = true) {
  testing::Gen gen(seed);
  std::vector<RationalPoint> out;
  for (int i = 0; i < count; ++i) out.push_back(gen.point(coords, height, nonzero));
  return out;
}

TEST(Margins, UnitIdealArithmetic) {
  const auto unit = HomogeneousMonomialIdeal::unit(2);
  const auto eps = make_rational(1, 3);
  const auto pts = sample(71, 3, 50, 1000);
  const auto r32 = margin_arithmetic(unit, eps, PlaceSet{}, pts);
  const auto r42 = margin_truncated_arithmetic(unit, eps, PlaceSet{}, pts);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double h = weil_height(pts[i]);
    EXPECT_NEAR(r32.rows[i].margin.value(), (3 + 1.0 / 3) * h, 1e-9);
    EXPECT_NEAR(r42.rows[i].margin.value(), (3 + 1.0 / 3) * h, 1e-9);
    EXPECT_GE(r32.rows[i].margin.value(), 0.0);
    EXPECT_FALSE(r32.rows[i].flagged);
  }
  EXPECT_EQ(r32.columns, (std::vector<std::string>{"h_K", "m_a", "m_I_minus", "eps_h_A", "d"}));
  EXPECT_EQ(r42.columns, (std::vector<std::string>{"N1_a", "d_k", "h_K", "h_a", "h_I_minus", "eps_h_A"}));
}

TEST(Margins, CoordinateTriangleIsTheClassicalMargin) {
  const auto a = hom({{1, 1, 1}});
  const auto s = PlaceSet::parse("inf,2,3");
  const auto rep = margin_arithmetic(a, make_rational(1, 2), s, sample(72, 3, 100, 1000));
  EXPECT_TRUE(rep.left_limit.is_unit());
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const auto& row = rep.rows[i];
    ASSERT_FALSE(row.error);
    EXPECT_EQ(row.terms[2].archimedean, 0.0);
    EXPECT_TRUE(row.terms[2].finite.empty());
    const auto classical = divisor_proximity({1, 1, 1}, RationalPoint::parse(row.label), s);
    EXPECT_EQ(row.terms[1].archimedean, classical.archimedean);
    EXPECT_EQ(row.terms[1].finite, classical.finite);
  }
}

TEST(Margins, PointIdealSquaredOnThePlane) {
  const auto a = hom({{0, 2, 0}, {0, 1, 1}, {0, 0, 2}});
  const RationalPoint p({1, 6, 10});
  const auto rep = margin_arithmetic(a, make_rational(1, 10), PlaceSet{}, {p});
  EXPECT_TRUE(rep.left_limit.is_unit());
  const auto& row = rep.rows.at(0);
  EXPECT_EQ(row.terms[1].value(), weil_local(a, p, Place::infinity()).value());
  EXPECT_EQ(row.terms[2].value(), 0.0);
  EXPECT_NEAR(row.margin.value(), 0.1 * std::log(10.0) + 3 * std::log(10.0) - row.terms[1].value(), 1e-12);
}

TEST(Margins, ErrorRowsAreKeptAndFlagged) {
  const auto a = hom({{0, 1, 0}, {0, 0, 1}});
  const auto rep = margin_arithmetic(a, make_rational(1), PlaceSet{}, {RationalPoint({1, 0, 0}), RationalPoint({1, 2, 3})});
  ASSERT_EQ(rep.rows.size(), 2u);
  EXPECT_EQ(rep.rows[0].error, std::optional<std::string>("point_on_zero_set"));
  EXPECT_TRUE(rep.rows[0].flagged);
  EXPECT_FALSE(rep.rows[1].error);
  EXPECT_TRUE(report_self_consistent(rep));
  EXPECT_THROW(margin_arithmetic(a, make_rational(0), PlaceSet{}, {}), std::invalid_argument);
  EXPECT_THROW(margin_arithmetic(a, make_rational(1), PlaceSet::parse("2"), {}), std::invalid_argument);
  EXPECT_THROW(margin_arithmetic(a, make_rational(1), PlaceSet{}, {RationalPoint({1, 2})}), std::invalid_argument);
}

TEST(Margins, PropertySelfConsistency) {
  testing::Gen gen(73);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = gen.homogeneous(2, gen.uniform(1, 3), 3);
    PlaceSet s;
    s.primes.insert(gen.prime());
    std::vector<RationalPoint> pts;
    for (int k = 0; k < 10; ++k) pts.push_back(gen.point(3, 200, false));
    const auto eps = gen.positive_rational(3, 5);
    const double slack = static_cast<double>(gen.uniform(0, 3));
    EXPECT_TRUE(report_self_consistent(margin_arithmetic(a, eps, s, pts, slack)));
    EXPECT_TRUE(report_self_consistent(margin_truncated_arithmetic(a, eps, s, pts, slack)));
  }
  const auto grid = RadiusGrid::parse("2,10,50");
  const auto a = hom({{0, 1, 0}, {0, 0, 1}});
  EXPECT_TRUE(report_self_consistent(margin_nevanlinna(a, make_rational(1, 2), veronese(), grid)));
  EXPECT_TRUE(report_self_consistent(margin_truncated_nevanlinna(a, make_rational(1, 2), veronese(), grid)));
}

TEST(Margins, NevanlinnaUnitIdeal) {
  const auto unit = HomogeneousMonomialIdeal::unit(2);
  const auto grid = RadiusGrid::parse("2,5,10,50,100");
  const auto rep = margin_nevanlinna(unit, make_rational(1, 4), veronese(), grid);
  for (std::size_t i = 0; i < grid.radii().size(); ++i) {
    const double t = characteristic(veronese(), grid.radii()[i]);
    EXPECT_NEAR(rep.rows[i].margin.value(), 0.25 * t + 3 * t, 1e-9);
    EXPECT_GE(rep.rows[i].margin.value(), 0.0);
  }
  const auto r41 = margin_truncated_nevanlinna(hom({{0, 1, 0}, {0, 0, 1}}), make_rational(1, 4), veronese(), grid);
  for (const auto& row : r41.rows) EXPECT_EQ(row.terms[1].value(), 0.0);  // N_Ram
  EXPECT_THROW(margin_nevanlinna(hom({{0, 0, 1}}), make_rational(1),
                                 PolynomialCurve({poly({1}), poly({0, 1}), Polynomial()}), grid),
               DomainError);
}

TEST(Margins, NevanlinnaLeftLimitOfCoordinateDivisorVanishes) {
  const auto d = hom({{1, 1, 1}});
  const auto rep = margin_nevanlinna(d, make_rational(1, 2), veronese(), RadiusGrid::parse("2,10,100"));
  for (const auto& row : rep.rows) EXPECT_NEAR(row.terms[2].value(), 0.0, 1e-9);
}

TEST(Reduction, Examples) {
  const auto pts = sample(74, 3, 100, 1000, false);
  const auto one = reduction_check({0, 1, 0}, pts, {}, RadiusGrid::parse("2"));
  EXPECT_TRUE(one.passed);
  EXPECT_EQ(one.points_checked + one.points_skipped, 100u);
  const auto three = reduction_check({1, 1, 1}, {}, {veronese()}, RadiusGrid::range(2, 100, 7));
  EXPECT_TRUE(three.passed);
  EXPECT_LE(three.max_analytic_deviation, 1e-6);
  EXPECT_TRUE(reduction_check({0, 0, 0}, pts, {veronese()}, RadiusGrid::parse("2,3")).passed);
  EXPECT_THROW(reduction_check({2, 0, 0}, pts, {}, RadiusGrid::parse("2")), std::invalid_argument);
}

TEST(Reduction, CurveInsideTheDivisorFails) {
  const PolynomialCurve in_line({poly({1}), poly({0, 1}), Polynomial()});
  const auto r = reduction_check({0, 0, 1}, {}, {in_line}, RadiusGrid::parse("2"));
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.failures.size(), 1u);
}

TEST(Blowup, ChartsAndTransitions) {
  testing::Gen gen(75);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = gen.point(3, 50, true);
    for (int chart : {1, 2}) {
      const auto q = blowup::to_chart(p, chart);
      ASSERT_TRUE(q);
      EXPECT_EQ(blowup::from_chart(chart, *q), p);
      const auto other = blowup::transition(chart, *q);
      ASSERT_TRUE(other);
      EXPECT_EQ(blowup::transition(3 - chart, *other), q);
      EXPECT_EQ(blowup::from_chart(3 - chart, *other), p);
    }
  }
  EXPECT_FALSE(blowup::to_chart(RationalPoint({0, 1, 1}), 1));
  EXPECT_FALSE(blowup::to_chart(RationalPoint({1, 0, 1}), 1));
  EXPECT_FALSE(blowup::transition(1, {make_rational(2), make_rational(0)}));
}

TEST(Blowup, ExceptionalDivisor) {
  EXPECT_EQ(blowup::exceptional_order(hom({{0, 1, 0}})), 1);
  EXPECT_EQ(blowup::exceptional_order(hom({{0, 0, 1}})), 1);
  EXPECT_EQ(blowup::exceptional_order(blowup::power_of_center(4)), 4);
  EXPECT_EQ(blowup::exceptional_order(hom({{2, 0, 0}})), 0);
  EXPECT_NEAR(blowup::exceptional_weil(RationalPoint({100, 1, 5})), std::log(20.0), 1e-14);
  EXPECT_EQ(blowup::exceptional_weil(RationalPoint({1, 100, 5})), 0.0);
  EXPECT_EQ(blowup::exceptional_weil(RationalPoint({0, 1, 5})), 0.0);
  EXPECT_EQ(blowup::exceptional_multiplicity(RationalPoint({1, 9, 27}), 3), 2);
  EXPECT_EQ(blowup::exceptional_multiplicity(RationalPoint({3, 1, 1}), 3), 0);
  EXPECT_THROW(blowup::exceptional_weil(RationalPoint({1, 0, 0})), DomainError);
}

TEST(Blowup, EtaValidation) {
  EXPECT_EQ(blowup::validate_eta(1, std::nullopt), make_rational(1, 2));
  EXPECT_EQ(blowup::validate_eta(2, std::nullopt), make_rational(1, 4));
  EXPECT_EQ(blowup::validate_eta(3, std::nullopt), make_rational(1, 6));
  EXPECT_EQ(blowup::validate_eta(3, make_rational(1, 4)), make_rational(1, 4));
  EXPECT_THROW(blowup::validate_eta(3, make_rational(1, 2)), std::invalid_argument);  // 2/3 is a jump
  EXPECT_THROW(blowup::validate_eta(2, make_rational(0)), std::invalid_argument);
  EXPECT_THROW(blowup::validate_eta(2, make_rational(1)), std::invalid_argument);
  EXPECT_THROW(blowup::validate_eta(0, std::nullopt), std::invalid_argument);
}

TEST(Blowup, ChainForM1ReducesToNonnegativity) {
  const auto rep = blowup_chain_check(1, make_rational(1, 2), pinned_blowup_curves(), RadiusGrid::parse("2,10,100"));
  EXPECT_TRUE(rep.chain_ideal.is_unit());
  EXPECT_EQ(rep.chain_coefficient, -1);
  EXPECT_TRUE(rep.passed);
  for (const auto& t : rep.curves) {
    for (const auto& row : t.rows) EXPECT_GE(row.exceptional, -rep.constant);
  }
}

TEST(Blowup, ChainForM2OnShiftedCurve) {
  const std::vector<PolynomialCurve> curves = {pinned_blowup_curves()[0]};
  const auto rep = blowup_chain_check(2, make_rational(1, 4), curves, RadiusGrid::range(2, 100, 14));
  EXPECT_TRUE(rep.chain_ideal.is_unit());
  EXPECT_EQ(rep.chain_coefficient, 0);
  EXPECT_TRUE(rep.passed) << (rep.failures.empty() ? "" : rep.failures.front());
}

TEST(Blowup, ChainThroughTheCenter) {
  // (1, z, z^2) passes through [1:0:0] at z = 0 and lifts across E
  const auto rep = blowup_chain_check(3, std::nullopt, {veronese()}, RadiusGrid::parse("2,20,200"));
  EXPECT_TRUE(rep.passed) << (rep.failures.empty() ? "" : rep.failures.front());
  for (const auto& row : rep.curves.at(0).rows) {
    EXPECT_NEAR(row.truncated_lift, std::log(row.r), 1e-12);
    EXPECT_LE(row.canonical_gap, rep.constant);
  }
}

TEST(Blowup, ArithmeticVariant) {
  testing::Gen gen(76);
  std::vector<RationalPoint> pts;
  while (pts.size() < 200) {
    auto p = gen.point(3, 1000, false);
    if (p.coords()[1] != 0 || p.coords()[2] != 0) pts.push_back(p);
  }
  const auto rep = blowup_chain_check(2, std::nullopt, pts);
  EXPECT_TRUE(rep.passed) << (rep.failures.empty() ? "" : rep.failures.front());
  for (const auto& row : rep.points) EXPECT_TRUE(row.finite_exact);
  EXPECT_THROW(blowup_chain_check(2, std::nullopt, std::vector<RationalPoint>{RationalPoint({5, 0, 0})}), DomainError);
}

double functoriality_sup(int m, std::int64_t height, std::uint64_t seed) {
  testing::Gen gen(seed);
  const auto a = blowup::power_of_center(m);
  double sup = 0;
  for (int i = 0; i < 500; ++i) {
    const auto p = gen.point(3, height, true);
    const double gap = weil_local(a, p, Place::infinity()).archimedean - m * blowup::exceptional_weil(p);
    sup = std::max(sup, std::fabs(gap));
  }
  return sup;
}

TEST(Blowup, PropertyFunctorialityGapDoesNotGrowWithHeight) {
  for (int m = 1; m <= 3; ++m) {
    const double small = functoriality_sup(m, 1000, 77);
    const double large = functoriality_sup(m, 1000000, 77);
    EXPECT_LT(small, 1e9);
    EXPECT_LE(large - small, 0.1);
  }
}

}  // namespace
}  // namespace mulideal
