#include "mulideal/blowup.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "mulideal/errors.hpp"
#include "mulideal/factor.hpp"
#include "mulideal/multiplier.hpp"
#include "mulideal/sheaf.hpp"

namespace mulideal {
namespace blowup {
namespace {

void check_plane(const RationalPoint& p) {
  if (p.ambient_dim() != 2) throw std::invalid_argument("blow-up points live on P^2, got " + p.to_string());
}

void check_not_center(std::int64_t x1, std::int64_t x2) {
  if (x1 == 0 && x2 == 0) throw DomainError("point_on_zero_set", "point is the blown-up center [1:0:0]");
}

void check_chart(int chart) {
  if (chart != 1 && chart != 2) throw std::invalid_argument("chart must be 1 or 2");
}

}  // namespace

std::optional<ChartPoint> to_chart(const RationalPoint& p, int chart) {
  check_plane(p);
  check_chart(chart);
  const auto& x = p.coords();
  const std::size_t i = chart == 1 ? 1 : 2;
  if (x[0] == 0 || x[i] == 0) return std::nullopt;
  const Rational x0(x[0]), x1(x[1]), x2(x[2]);
  if (chart == 1) return ChartPoint{Rational(x1 / x0), Rational(x2 / x1)};
  return ChartPoint{Rational(x1 / x2), Rational(x2 / x0)};
}

RationalPoint from_chart(int chart, const ChartPoint& q) {
  check_chart(chart);
  const auto& [a, b] = q;
  std::vector<Rational> affine = chart == 1 ? std::vector<Rational>{1, a, Rational(a * b)}
                                            : std::vector<Rational>{1, Rational(a * b), b};
  Integer den = 1;
  for (const auto& c : affine) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<std::int64_t> coords;
  for (const auto& c : affine) coords.push_back(to_int64(Integer(Rational(c * den).get_num())));
  return RationalPoint(std::move(coords));
}

std::optional<ChartPoint> transition(int from, const ChartPoint& q) {
  check_chart(from);
  const auto& [a, b] = q;
  if (from == 1) {
    if (b == 0) return std::nullopt;
    return ChartPoint{Rational(1 / b), Rational(a * b)};
  }
  if (a == 0) return std::nullopt;
  return ChartPoint{Rational(a * b), Rational(1 / a)};
}

HomogeneousMonomialIdeal power_of_center(int m) {
  if (m < 1) throw std::invalid_argument("multiplicity m must be >= 1");
  std::vector<ExponentVector> gens;
  for (int i = 0; i <= m; ++i) gens.push_back({0, i, m - i});
  return HomogeneousMonomialIdeal::from_generators(std::move(gens));
}

std::int64_t exceptional_order(const HomogeneousMonomialIdeal& a) {
  if (a.ambient_dim() != 2) throw std::invalid_argument("exceptional order needs an ideal on P^2");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& g : a.generators()) best = std::min(best, g[1] + g[2]);
  return best;
}

double exceptional_weil(std::span<const std::complex<double>> x) {
  if (x.size() != 3) throw std::invalid_argument("exceptional Weil function needs a point of P^2");
  if (x[1] == 0.0 && x[2] == 0.0) throw DomainError("point_on_zero_set", "point is the blown-up center [1:0:0]");
  if (x[0] == 0.0) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  const double l0 = std::log(std::abs(x[0]));
  for (std::size_t i = 1; i <= 2; ++i) {
    if (x[i] == 0.0) continue;
    best = std::min(best, std::max(0.0, l0 - std::log(std::abs(x[i]))));
  }
  return best;
}

double exceptional_weil(const RationalPoint& p) {
  check_plane(p);
  const auto& c = p.coords();
  const std::complex<double> x[3] = {static_cast<double>(c[0]), static_cast<double>(c[1]), static_cast<double>(c[2])};
  return exceptional_weil(x);
}

std::int64_t exceptional_multiplicity(const RationalPoint& p, std::uint64_t prime) {
  check_plane(p);
  const auto& x = p.coords();
  check_not_center(x[1], x[2]);
  if (x[0] == 0) return 0;
  const std::int64_t o0 = valuation(x[0], prime);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::size_t i = 1; i <= 2; ++i) {
    if (x[i] == 0) continue;
    best = std::min<std::int64_t>(best, std::max<std::int64_t>(0, valuation(x[i], prime) - o0));
  }
  return best;
}

Rational validate_eta(int m, std::optional<Rational> eta) {
  if (m < 1) throw std::invalid_argument("multiplicity m must be >= 1");
  const Rational e = eta.value_or(make_rational(1, 2 * static_cast<std::int64_t>(m)));
  if (e <= 0 || e >= 1) throw std::invalid_argument("eta must lie in (0, 1), got " + to_string(e));
  const Rational c = 1 - e;
  const auto a = MonomialIdeal::minimalize({{1, 0}, {0, 1}}).power(m);
  const auto spectrum = jumping_numbers(a, Rational(1));
  for (const auto& xi : spectrum.thresholds) {
    if (xi >= c && xi < 1) {
      throw std::invalid_argument("eta = " + to_string(e) + " is too large: jumping number " + to_string(xi) +
                                  " lies in [1 - eta, 1)");
    }
  }
  if (multiplier_ideal(a, c) != multiplier_ideal_minus(a, Rational(1))) {
    throw std::invalid_argument("eta = " + to_string(e) + " does not satisfy I(a^{1-eta}) = I^-(a)");
  }
  return e;
}

}  // namespace blowup

namespace {

std::string format_double(double r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", r);
  return buf;
}

BlowupReport start_report(int m, std::optional<Rational> eta, double constant) {
  BlowupReport rep;
  rep.m = m;
  rep.eta = blowup::validate_eta(m, std::move(eta));
  rep.chain_coefficient = to_int64(Integer(floor(Rational((1 - rep.eta) * m)) - 1));
  rep.ideal = blowup::power_of_center(m);
  rep.chain_ideal = projective_multiplier_ideal(rep.ideal, Rational(1 - rep.eta));
  rep.constant = constant;
  return rep;
}

Polynomial integer_poly(std::initializer_list<long> coeffs) {
  std::vector<GaussianRational> c;
  for (long v : coeffs) c.emplace_back(Rational(v));
  return Polynomial(std::move(c));
}

}  // namespace

std::vector<PolynomialCurve> pinned_blowup_curves() {
  return {
      PolynomialCurve({integer_poly({1}), integer_poly({1, 1}), integer_poly({1, 0, 1})}),
      PolynomialCurve({integer_poly({1}), integer_poly({0, 1}), integer_poly({0, 0, 1})}),
      PolynomialCurve({integer_poly({3, 1}), integer_poly({0, 0, 1}), integer_poly({0, 0, -1, 1})}),
  };
}

BlowupReport blowup_chain_check(int m, std::optional<Rational> eta, const std::vector<PolynomialCurve>& curves,
                                const RadiusGrid& grid, double constant, const QuadratureOptions& opts) {
  auto rep = start_report(m, std::move(eta), constant);
  const auto center = blowup::power_of_center(1);
  const double md = m;
  const double k = static_cast<double>(rep.chain_coefficient);
  for (std::size_t idx = 0; idx < curves.size(); ++idx) {
    const auto& f = curves[idx];
    if (f.ambient_dim() != 2) throw std::invalid_argument("blow-up curves map to P^2");
    const auto& comps = f.components();
    // Points of C sent to the center: the zeros of gcd(f1, f2).
    const auto through_center = pull_back(f, center);
    const auto& g = through_center.gcd;
    const std::vector<Polynomial> w = {exact_quotient(comps[1], g), exact_quotient(comps[2], g)};

    BlowupCurveTable table;
    table.label = "curve[" + std::to_string(idx) + "]";
    for (double r : grid.radii()) {
      BlowupCurveRow row;
      row.r = r;
      row.proximity = proximity_curve(f, rep.ideal, r, opts);
      row.exceptional = circle_average(
          [&](std::complex<double> z) {
            const std::complex<double> x[3] = {comps[0](z), comps[1](z), comps[2](z)};
            return blowup::exceptional_weil(x);
          },
          r, opts);
      row.functoriality_gap = std::fabs(row.proximity - md * row.exceptional);
      row.chain_lhs = proximity_curve(f, rep.chain_ideal, r, opts);
      row.chain_rhs = k * row.exceptional;

      const double tf = characteristic(f, r, opts);
      const double tw = cartan_characteristic(w, r, opts);
      const double ne = counting_from_zeros(through_center.zeros, r, false);
      row.canonical_basis = -2 * tf - tw;
      row.canonical_pullback = -3 * tf + row.exceptional + ne;
      row.canonical_gap = std::fabs(row.canonical_basis - row.canonical_pullback);

      row.truncated_curve = truncated_counting_curve(f, rep.ideal, r);
      row.truncated_lift = counting_from_zeros(through_center.zeros, r, true);

      const std::string where = table.label + " r=" + format_double(r);
      const auto fail = [&](const std::string& what) {
        row.passed = false;
        rep.passed = false;
        rep.failures.push_back(where + ": " + what);
      };
      if (row.functoriality_gap > constant) fail("functoriality gap " + format_double(row.functoriality_gap));
      if (row.chain_lhs < row.chain_rhs - constant) fail("chain inequality");
      if (row.canonical_gap > constant) fail("canonical bookkeeping gap " + format_double(row.canonical_gap));
      if (std::fabs(row.truncated_curve - row.truncated_lift) > 1e-9) fail("truncated counting mismatch");
      table.rows.push_back(row);
    }
    rep.curves.push_back(std::move(table));
  }
  return rep;
}

BlowupReport blowup_chain_check(int m, std::optional<Rational> eta, const std::vector<RationalPoint>& points,
                                double constant) {
  auto rep = start_report(m, std::move(eta), constant);
  const std::int64_t k = rep.chain_coefficient;
  for (const auto& p : points) {
    if (p.ambient_dim() != 2) throw std::invalid_argument("blow-up points live on P^2, got " + p.to_string());
    const auto& x = p.coords();
    if (x[1] == 0 && x[2] == 0) throw DomainError("point_on_zero_set", "point is the blown-up center [1:0:0]");

    BlowupPointRow row;
    row.label = p.to_string();
    const auto inf = Place::infinity();
    const double le = blowup::exceptional_weil(p);
    row.functoriality_gap = std::fabs(weil_local(rep.ideal, p, inf).archimedean - m * le);
    row.chain_slack = weil_local(rep.chain_ideal, p, inf).archimedean - static_cast<double>(k) * le;

    double he = le;
    for (auto q : prime_support(p)) {
      const auto place = Place::prime(q);
      const std::int64_t e = blowup::exceptional_multiplicity(p, q);
      he += static_cast<double>(e) * std::log(static_cast<double>(q));
      if (weil_local(rep.ideal, p, place).multiplicity != m * e) row.finite_exact = false;
      if (weil_local(rep.chain_ideal, p, place).multiplicity < k * e) row.finite_exact = false;
    }
    const RationalPoint line({x[1], x[2]});
    row.canonical_gap = std::fabs(he - (weil_height(p) - weil_height(line)));

    const auto fail = [&](const std::string& what) {
      row.passed = false;
      rep.passed = false;
      rep.failures.push_back(row.label + ": " + what);
    };
    if (!row.finite_exact) fail("finite-place identity");
    if (row.functoriality_gap > constant) fail("functoriality gap " + format_double(row.functoriality_gap));
    if (row.chain_slack < -constant) fail("chain inequality");
    if (row.canonical_gap > constant) fail("canonical bookkeeping gap " + format_double(row.canonical_gap));
    rep.points.push_back(std::move(row));
  }
  return rep;
}

}  // namespace mulideal
