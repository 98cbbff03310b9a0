#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mulideal/arithmetic.hpp"
#include "mulideal/nevanlinna.hpp"
#include "mulideal/rational.hpp"

namespace mulideal {

// Blow-up of P^2 at [1:0:0], seen over the affine plane x0 != 0 with
// coordinates x = x1/x0, y = x2/x0.
//   chart 1: (s, t) with x = s,   y = s t   (E = {s = 0})
//   chart 2: (u, v) with x = u v, y = v     (E = {v = 0})
// K_{X'/X} = E and, for a = (x, y)^m, the pullback is a.O_{X'} = O(-m E).
namespace blowup {

using ChartPoint = std::pair<Rational, Rational>;

// Chart coordinates of the strict preimage of p; nullopt when p is outside
// the chart (x0 = 0, or the chart's dividing coordinate vanishes).
std::optional<ChartPoint> to_chart(const RationalPoint& p, int chart);
// mu of a chart point, as a point of P^2.
RationalPoint from_chart(int chart, const ChartPoint& q);
// Chart 1 <-> chart 2 off E; nullopt where the target chart does not contain q.
std::optional<ChartPoint> transition(int from, const ChartPoint& q);

// (x1, x2)^m on P^2.
HomogeneousMonomialIdeal power_of_center(int m);
// ord_E of the pullback of a homogeneous monomial ideal on P^2.
std::int64_t exceptional_order(const HomogeneousMonomialIdeal& a);

// lambda_E at the lift of x: min over charts 1, 2 of log+ |x0 / x_i|.
// Throws DomainError("point_on_zero_set") at the center itself.
double exceptional_weil(std::span<const std::complex<double>> x);
double exceptional_weil(const RationalPoint& p);
// p-adic lambda_E, in multiples of log p.
std::int64_t exceptional_multiplicity(const RationalPoint& p, std::uint64_t prime);

// Default eta is 1/(2m), half the gap between 1 and the jump (m-1)/m.
// Throws std::invalid_argument unless 0 < eta < 1 and I(a^{1-eta}) = I^-(a),
// checked both against the jumping spectrum and by direct comparison.
Rational validate_eta(int m, std::optional<Rational> eta);

}  // namespace blowup

struct BlowupCurveRow {
  double r = 0;
  double proximity = 0;            // m_f(a, r)
  double exceptional = 0;          // m_g(E, r)
  double functoriality_gap = 0;    // |m_f(a) - m * m_g(E)|
  double chain_lhs = 0;            // m_f(I(a^{1-eta}), r)
  double chain_rhs = 0;            // k * m_g(E, r)
  double canonical_basis = 0;      // T_{K_X', g} from -2H - (H - E)
  double canonical_pullback = 0;   // -3 T_f + T_{E,g}
  double canonical_gap = 0;
  double truncated_curve = 0;      // N^(1)_f(a, r)
  double truncated_lift = 0;       // N^(1)_g(E, r)
  bool passed = true;
};

struct BlowupCurveTable {
  std::string label;
  std::vector<BlowupCurveRow> rows;
};

struct BlowupPointRow {
  std::string label;
  double functoriality_gap = 0;  // archimedean |lambda_a - m lambda_E|
  bool finite_exact = true;      // lambda_{a,p} = m lambda_{E,p} and the chain holds exactly at every p
  double chain_slack = 0;        // archimedean lambda_{I(a^{1-eta})} - k lambda_E
  double canonical_gap = 0;      // |h_E(P') - (h(P) - h([x1:x2]))|
  bool passed = true;
};

struct BlowupReport {
  int m = 0;
  Rational eta;
  std::int64_t chain_coefficient = 0;  // k = floor((1-eta) m) - 1
  HomogeneousMonomialIdeal ideal = HomogeneousMonomialIdeal::unit(2);
  HomogeneousMonomialIdeal chain_ideal = HomogeneousMonomialIdeal::unit(2);  // I(a^{1-eta})
  double constant = 1.5;
  std::vector<BlowupCurveTable> curves;
  std::vector<BlowupPointRow> points;
  bool passed = true;
  std::vector<std::string> failures;
};

BlowupReport blowup_chain_check(int m, std::optional<Rational> eta, const std::vector<PolynomialCurve>& curves,
                                const RadiusGrid& grid, double constant = 1.5, const QuadratureOptions& opts = {});

// Arithmetic variant. Points at the center [1:0:0] are rejected with DomainError.
BlowupReport blowup_chain_check(int m, std::optional<Rational> eta, const std::vector<RationalPoint>& points,
                                double constant = 1.5);

// Curves used by the acceptance run: (1, z+1, z^2+1), (1, z, z^2), (z+3, z^2, z^3-z^2).
std::vector<PolynomialCurve> pinned_blowup_curves();

}  // namespace mulideal
