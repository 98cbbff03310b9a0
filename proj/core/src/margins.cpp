#include "mulideal/conjecture.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "mulideal/errors.hpp"
#include "mulideal/factor.hpp"
#include "mulideal/sheaf.hpp"

namespace mulideal {
namespace {

LogSum archimedean(double v) {
  LogSum s;
  s.archimedean = v;
  return s;
}

std::string format_radius(double r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", r);
  return buf;
}

void finish_row(MarginRow& row, const std::vector<int>& signs, double slack) {
  for (std::size_t k = 0; k < row.terms.size(); ++k) row.margin += row.terms[k].scaled(signs[k]);
  row.flagged = row.margin.value() < -slack;
}

MarginReport make_report(MarginKind kind, const HomogeneousMonomialIdeal& a, const Rational& eps, double slack) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive, got " + to_string(eps));
  MarginReport r;
  r.kind = kind;
  r.ambient_dim = a.ambient_dim();
  r.ideal = a;
  r.left_limit = projective_multiplier_ideal_minus(a, Rational(1));
  r.eps = eps;
  r.slack = slack;
  return r;
}

template <typename RowFn>
MarginReport arithmetic_report(MarginKind kind, const HomogeneousMonomialIdeal& a, const Rational& eps,
                               const PlaceSet& s, const std::vector<RationalPoint>& points, double slack,
                               std::vector<std::string> columns, std::vector<int> signs, RowFn&& fill) {
  if (!s.infinity) throw std::invalid_argument("the place set S must contain the archimedean place");
  auto report = make_report(kind, a, eps, slack);
  report.places = s;
  report.columns = std::move(columns);
  report.signs = std::move(signs);
  for (const auto& p : points) {
    if (p.ambient_dim() != a.ambient_dim()) throw std::invalid_argument("point " + p.to_string() + " is not on P^n");
    MarginRow row;
    row.label = p.to_string();
    try {
      row.terms = fill(report, p);
      finish_row(row, report.signs, slack);
    } catch (const DomainError& e) {
      row.terms.clear();
      row.margin = LogSum{};
      row.flagged = true;
      row.error = e.kind();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace

std::string to_string(MarginKind kind) {
  switch (kind) {
    case MarginKind::margins32: return "margins32";
    case MarginKind::margins42: return "margins42";
    case MarginKind::margins31: return "margins31";
    case MarginKind::margins41: return "margins41";
  }
  return "unknown";
}

MarginReport margin_arithmetic(const HomogeneousMonomialIdeal& a, const Rational& eps, const PlaceSet& s,
                               const std::vector<RationalPoint>& points, double slack) {
  const double e = to_double(eps);
  const auto n1 = static_cast<std::int64_t>(a.ambient_dim() + 1);
  return arithmetic_report(
      MarginKind::margins32, a, eps, s, points, slack, {"h_K", "m_a", "m_I_minus", "eps_h_A", "d"},
      {-1, -1, +1, +1, +1}, [&](const MarginReport& rep, const RationalPoint& p) {
        const double h = weil_height(p);
        return std::vector<LogSum>{archimedean(height_class(-n1, p)), proximity(rep.ideal, p, s),
                                   proximity(rep.left_limit, p, s), archimedean(e * h), LogSum{}};
      });
}

MarginReport margin_truncated_arithmetic(const HomogeneousMonomialIdeal& a, const Rational& eps, const PlaceSet& s,
                                         const std::vector<RationalPoint>& points, double slack) {
  const double e = to_double(eps);
  const auto n1 = static_cast<std::int64_t>(a.ambient_dim() + 1);
  return arithmetic_report(
      MarginKind::margins42, a, eps, s, points, slack, {"N1_a", "d_k", "h_K", "h_a", "h_I_minus", "eps_h_A"},
      {+1, +1, -1, -1, +1, +1}, [&](const MarginReport& rep, const RationalPoint& p) {
        const double h = weil_height(p);
        return std::vector<LogSum>{truncated_counting(rep.ideal, p, s), LogSum{}, archimedean(height_class(-n1, p)),
                                   height_ideal(rep.ideal, p), height_ideal(rep.left_limit, p), archimedean(e * h)};
      });
}

MarginReport margin_nevanlinna(const HomogeneousMonomialIdeal& a, const Rational& eps, const PolynomialCurve& f,
                               const RadiusGrid& grid, const QuadratureOptions& opts, double slack) {
  auto report = make_report(MarginKind::margins31, a, eps, slack);
  report.columns = {"T_K", "m_a", "m_I_minus", "eps_T_A"};
  report.signs = {-1, -1, +1, +1};
  pull_back(f, report.ideal);
  pull_back(f, report.left_limit);
  const double e = to_double(eps);
  const double n1 = static_cast<double>(a.ambient_dim() + 1);
  for (double r : grid.radii()) {
    MarginRow row;
    row.label = format_radius(r);
    const double t = characteristic(f, r, opts);
    row.terms = {archimedean(-n1 * t), archimedean(proximity_curve(f, report.ideal, r, opts)),
                 archimedean(proximity_curve(f, report.left_limit, r, opts)), archimedean(e * t)};
    finish_row(row, report.signs, slack);
    report.rows.push_back(std::move(row));
  }
  return report;
}

MarginReport margin_truncated_nevanlinna(const HomogeneousMonomialIdeal& a, const Rational& eps,
                                         const PolynomialCurve& f, const RadiusGrid& grid,
                                         const QuadratureOptions& opts, double slack) {
  auto report = make_report(MarginKind::margins41, a, eps, slack);
  report.columns = {"N1_a", "N_ram", "T_K", "T_a", "T_I_minus", "eps_T_A"};
  report.signs = {+1, +1, -1, -1, +1, +1};
  const auto pa = pull_back(f, report.ideal);
  const auto pi = pull_back(f, report.left_limit);
  const double e = to_double(eps);
  const double n1 = static_cast<double>(a.ambient_dim() + 1);
  for (double r : grid.radii()) {
    MarginRow row;
    row.label = format_radius(r);
    const double t = characteristic(f, r, opts);
    const double ta = proximity_curve(f, report.ideal, r, opts) + counting_from_zeros(pa.zeros, r, false);
    const double ti = proximity_curve(f, report.left_limit, r, opts) + counting_from_zeros(pi.zeros, r, false);
    row.terms = {archimedean(counting_from_zeros(pa.zeros, r, true)), LogSum{}, archimedean(-n1 * t),
                 archimedean(ta), archimedean(ti), archimedean(e * t)};
    finish_row(row, report.signs, slack);
    report.rows.push_back(std::move(row));
  }
  return report;
}

bool report_self_consistent(const MarginReport& report, double tolerance) {
  if (report.columns.size() != report.signs.size()) return false;
  for (const auto& row : report.rows) {
    if (row.error) {
      if (!row.flagged) return false;
      continue;
    }
    if (row.terms.size() != report.columns.size()) return false;
    LogSum sum;
    for (std::size_t k = 0; k < row.terms.size(); ++k) sum += row.terms[k].scaled(report.signs[k]);
    if (sum.finite != row.margin.finite) return false;
    if (std::fabs(sum.archimedean - row.margin.archimedean) > tolerance) return false;
    if (row.flagged != (row.margin.value() < -report.slack)) return false;
  }
  return true;
}

LogSum divisor_proximity(const std::vector<std::int64_t>& multiplicities, const RationalPoint& p, const PlaceSet& s) {
  const auto& x = p.coords();
  if (multiplicities.size() != x.size()) throw std::invalid_argument("divisor and point dimensions differ");
  std::vector<double> logs(x.size(), 0.0);
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] == 0) {
      if (multiplicities[j] > 0) throw DomainError("point_on_zero_set", "point lies on the divisor");
      continue;
    }
    logs[j] = std::log(std::fabs(static_cast<double>(x[j])));
    top = std::max(top, logs[j]);
  }
  LogSum out;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (multiplicities[j] == 0) continue;
    out.archimedean += static_cast<double>(multiplicities[j]) * (top - logs[j]);
    for (auto q : s.primes) out.add_finite(q, multiplicities[j] * valuation(x[j], q));
  }
  return out;
}

double divisor_proximity_curve(const std::vector<std::int64_t>& multiplicities, const PolynomialCurve& f, double r,
                               const QuadratureOptions& opts) {
  const auto& comps = f.components();
  if (multiplicities.size() != comps.size()) throw std::invalid_argument("divisor and curve dimensions differ");
  double total = 0;
  for (std::size_t j = 0; j < comps.size(); ++j) {
    if (multiplicities[j] == 0) continue;
    if (comps[j].is_zero()) throw DomainError("curve_in_zero_set", "the curve lies inside the divisor");
    total += static_cast<double>(multiplicities[j]) * circle_average(
                                                          [&](std::complex<double> z) {
                                                            double top = -std::numeric_limits<double>::infinity();
                                                            for (const auto& c : comps) top = std::max(top, std::log(std::abs(c(z))));
                                                            return top - std::log(std::abs(comps[j](z)));
                                                          },
                                                          r, opts);
  }
  return total;
}

ReductionCheck reduction_check(const std::vector<std::int64_t>& divisor, const std::vector<RationalPoint>& points,
                               const std::vector<PolynomialCurve>& curves, const RadiusGrid& grid,
                               const QuadratureOptions& opts, double tolerance) {
  for (auto m : divisor) {
    if (m != 0 && m != 1) throw std::invalid_argument("reduction check needs a reduced divisor (0/1 multiplicities)");
  }
  if (divisor.size() < 2) throw std::invalid_argument("divisor needs n+1 >= 2 coordinates");
  const auto a = HomogeneousMonomialIdeal::from_generators({divisor});
  const auto minus = projective_multiplier_ideal_minus(a, Rational(1));

  ReductionCheck out;
  const auto fail = [&](std::string msg) {
    out.passed = false;
    out.failures.push_back(std::move(msg));
  };
  for (const auto& p : points) {
    if (p.ambient_dim() + 1 != divisor.size()) throw std::invalid_argument("point " + p.to_string() + " has wrong dimension");
    bool on_divisor = false;
    for (std::size_t j = 0; j < divisor.size(); ++j) on_divisor = on_divisor || (divisor[j] && p.coords()[j] == 0);
    if (on_divisor) {
      ++out.points_skipped;
      continue;
    }
    PlaceSet all;
    for (auto q : prime_support(p)) all.primes.insert(q);
    const auto m_minus = proximity(minus, p, all);
    if (m_minus.archimedean != 0.0 || !m_minus.finite.empty()) {
      fail("m(I^-(a)) != 0 at " + p.to_string());
    }
    const auto m_a = proximity(a, p, all);
    const auto m_d = divisor_proximity(divisor, p, all);
    if (m_a.archimedean != m_d.archimedean || m_a.finite != m_d.finite) {
      fail("m(a) != m(D) at " + p.to_string());
    }
    ++out.points_checked;
  }
  for (const auto& f : curves) {
    if (f.ambient_dim() + 1 != divisor.size()) throw std::invalid_argument("curve has wrong dimension");
    try {
      pull_back(f, a);
    } catch (const DomainError&) {
      fail("curve lies inside the divisor");
      continue;
    }
    for (double r : grid.radii()) {
      const double mm = std::fabs(proximity_curve(f, minus, r, opts));
      const double dev = std::fabs(proximity_curve(f, a, r, opts) - divisor_proximity_curve(divisor, f, r, opts));
      out.max_analytic_deviation = std::max({out.max_analytic_deviation, mm, dev});
      if (mm > tolerance) fail("m_f(I^-(a), " + format_radius(r) + ") exceeds tolerance");
      if (dev > tolerance) fail("|m_f(a) - m_f(D)| at r = " + format_radius(r) + " exceeds tolerance");
      ++out.radii_checked;
    }
  }
  return out;
}

}  // namespace mulideal
