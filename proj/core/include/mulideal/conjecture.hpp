#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mulideal/arithmetic.hpp"
#include "mulideal/nevanlinna.hpp"
#include "mulideal/rational.hpp"

namespace mulideal {

// Which inequality a report evaluates. The names double as CLI subcommands.
enum class MarginKind {
  margins32,  // h_K + m(a) - m(I^-(a)) <= eps h_A + d(P)               over points
  margins42,  // N^(1)(a) + d_k(P) >= h_K + h_a - h_{I^-(a)} - eps h_A  over points
  margins31,  // T_K + m_f(a) - m_f(I^-(a)) <= eps T_A                 over radii
  margins41,  // N_f^(1)(a) + N_Ram >= T_K + T_a - T_{I^-(a)} - eps T_A over radii
};

std::string to_string(MarginKind kind);

struct MarginRow {
  std::string label;                 // point coordinates or radius
  std::vector<LogSum> terms;         // aligned with MarginReport::columns
  LogSum margin;                     // sum_k signs[k] * terms[k]
  bool flagged = false;              // margin < -slack, or an error row
  std::optional<std::string> error;  // e.g. point_on_zero_set; terms empty then
};

// Per-item decomposition of one inequality, margin = right side - left side.
// A is the hyperplane class, K = O(-(n+1)), d(P) = d_k(P) = 0 (points over Q),
// N_Ram = 0 (identity covering). Flagged rows are candidates for the
// exceptional set, not counterexamples: the O(1) terms are unquantified.
struct MarginReport {
  MarginKind kind = MarginKind::margins32;
  std::size_t ambient_dim = 0;
  HomogeneousMonomialIdeal ideal = HomogeneousMonomialIdeal::unit(1);
  HomogeneousMonomialIdeal left_limit = HomogeneousMonomialIdeal::unit(1);  // I^-(a)
  Rational eps;
  double slack = 0;
  std::optional<PlaceSet> places;  // arithmetic reports only
  std::vector<std::string> columns;
  std::vector<int> signs;
  std::vector<MarginRow> rows;
};

MarginReport margin_arithmetic(const HomogeneousMonomialIdeal& a, const Rational& eps, const PlaceSet& s,
                               const std::vector<RationalPoint>& points, double slack = 0);
MarginReport margin_truncated_arithmetic(const HomogeneousMonomialIdeal& a, const Rational& eps, const PlaceSet& s,
                                         const std::vector<RationalPoint>& points, double slack = 0);
// Throw DomainError("curve_in_zero_set") if f(C) lies in the zero scheme of a.
MarginReport margin_nevanlinna(const HomogeneousMonomialIdeal& a, const Rational& eps, const PolynomialCurve& f,
                               const RadiusGrid& grid, const QuadratureOptions& opts = {}, double slack = 0);
MarginReport margin_truncated_nevanlinna(const HomogeneousMonomialIdeal& a, const Rational& eps,
                                         const PolynomialCurve& f, const RadiusGrid& grid,
                                         const QuadratureOptions& opts = {}, double slack = 0);

// Recomputes every row's margin from its own terms: finite parts must match
// exactly, archimedean parts within `tolerance`.
bool report_self_consistent(const MarginReport& report, double tolerance = 1e-9);

// Classical Weil function sum of a divisor sum_j m_j {x_j = 0} on P^n over the
// places of S, computed component by component.
LogSum divisor_proximity(const std::vector<std::int64_t>& multiplicities, const RationalPoint& p, const PlaceSet& s);
double divisor_proximity_curve(const std::vector<std::int64_t>& multiplicities, const PolynomialCurve& f, double r,
                               const QuadratureOptions& opts = {});

struct ReductionCheck {
  bool passed = true;
  std::size_t points_checked = 0;
  std::size_t points_skipped = 0;  // on the divisor
  std::size_t radii_checked = 0;
  double max_analytic_deviation = 0;
  std::vector<std::string> failures;
};

// For a reduced divisor D of coordinate hyperplanes of P^n (entries 0/1,
// n+1 of them): m(I^-(O(-D))) vanishes and m(O(-D)) equals the classical
// divisor proximity, exactly at points and within `tolerance` along curves.
ReductionCheck reduction_check(const std::vector<std::int64_t>& divisor, const std::vector<RationalPoint>& points,
                               const std::vector<PolynomialCurve>& curves, const RadiusGrid& grid,
                               const QuadratureOptions& opts = {}, double tolerance = 1e-6);

}  // namespace mulideal
