#include "mulideal/nevanlinna.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mulideal/errors.hpp"

namespace mulideal {
namespace {

constexpr double kPhase = 0.1;  // keeps nodes off the real axis

double log_abs(std::complex<double> z) {
  const double a = std::abs(z);
  return a == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(a);
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) throw std::invalid_argument("bad number in radius grid: '" + s + "'");
  return v;
}

}  // namespace

PolynomialCurve::PolynomialCurve(std::vector<Polynomial> components) : components_(std::move(components)) {
  if (components_.size() < 2) throw std::invalid_argument("a curve into P^n needs at least two components");
  if (std::all_of(components_.begin(), components_.end(), [](const Polynomial& p) { return p.is_zero(); })) {
    throw DomainError("degenerate_curve", "all curve components vanish identically");
  }
  if (std::all_of(components_.begin(), components_.end(), [](const Polynomial& p) { return p.is_constant(); })) {
    throw DomainError("constant_curve", "the curve is constant");
  }
  Polynomial g;
  for (const auto& p : components_) g = gcd(g, p);
  if (!g.is_constant()) {
    throw DomainError("degenerate_curve", "curve components share a common root (gcd of degree " +
                                              std::to_string(g.degree()) + ")");
  }
}

int PolynomialCurve::max_degree() const noexcept {
  int d = 0;
  for (const auto& p : components_) d = std::max(d, p.degree());
  return d;
}

RadiusGrid::RadiusGrid(std::vector<double> radii) : radii_(std::move(radii)) {
  if (radii_.empty()) throw std::invalid_argument("radius grid is empty");
  for (std::size_t i = 0; i < radii_.size(); ++i) {
    if (!(radii_[i] > 0) || !std::isfinite(radii_[i])) throw std::invalid_argument("radii must be positive and finite");
    if (i > 0 && !(radii_[i] > radii_[i - 1])) throw std::invalid_argument("radii must be strictly increasing");
  }
}

RadiusGrid RadiusGrid::range(double start, double stop, double step) {
  if (!(step > 0)) throw std::invalid_argument("radius grid step must be positive");
  std::vector<double> r;
  for (std::size_t k = 0;; ++k) {
    const double v = start + static_cast<double>(k) * step;
    if (v > stop + 1e-12 * std::fabs(stop)) break;
    r.push_back(v);
  }
  return RadiusGrid(std::move(r));
}

RadiusGrid RadiusGrid::parse(std::string_view text) {
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw std::invalid_argument("radius range must be start:stop:step");
    return range(parse_double(parts[0]), parse_double(parts[1]), parse_double(parts[2]));
  }
  std::vector<double> r;
  for (const auto& tok : split(text, ',')) r.push_back(parse_double(tok));
  return RadiusGrid(std::move(r));
}

double circle_average(const std::function<double(std::complex<double>)>& phi, double r,
                      const QuadratureOptions& opts) {
  if (opts.nodes == 0) throw std::invalid_argument("quadrature needs at least one node");
  const double two_pi = 2 * std::numbers::pi;
  std::size_t n = opts.nodes;
  double sum = 0;
  for (std::size_t k = 0; k < n; ++k) {
    sum += phi(std::polar(r, kPhase + two_pi * static_cast<double>(k) / static_cast<double>(n)));
  }
  double estimate = sum / static_cast<double>(n);
  while (n < opts.max_nodes) {
    double extra = 0;
    for (std::size_t k = 0; k < n; ++k) {
      extra += phi(std::polar(r, kPhase + two_pi * (static_cast<double>(k) + 0.5) / static_cast<double>(n)));
    }
    sum += extra;
    n *= 2;
    const double refined = sum / static_cast<double>(n);
    const bool done = std::fabs(refined - estimate) < opts.tolerance;
    estimate = refined;
    if (done) break;
  }
  return estimate;
}

double cartan_characteristic(std::span<const Polynomial> components, double r, const QuadratureOptions& opts) {
  double at_zero = 0;
  for (const auto& p : components) at_zero = std::max(at_zero, std::abs(p.coeff(0).to_complex()));
  if (at_zero == 0) throw DomainError("degenerate_curve", "all components vanish at z = 0");
  const double avg = circle_average(
      [&](std::complex<double> z) {
        double top = -std::numeric_limits<double>::infinity();
        for (const auto& p : components) top = std::max(top, log_abs(p(z)));
        return top;
      },
      r, opts);
  return avg - std::log(at_zero);
}

double characteristic(const PolynomialCurve& f, double r, const QuadratureOptions& opts) {
  return cartan_characteristic(f.components(), r, opts);
}

double weil_archimedean(const HomogeneousMonomialIdeal& a, std::span<const std::complex<double>> x) {
  if (x.size() != a.ambient_dim() + 1) throw std::invalid_argument("point dimension mismatch");
  std::vector<double> logs(x.size());
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < x.size(); ++j) {
    logs[j] = log_abs(x[j]);
    top = std::max(top, logs[j]);
  }
  double best = std::numeric_limits<double>::infinity();
  for (const auto& g : a.generators()) {
    double s = 0;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g[j] != 0) s += static_cast<double>(g[j]) * (top - logs[j]);
    }
    best = std::min(best, s);
  }
  return best;
}

Pullback pull_back(const PolynomialCurve& f, const HomogeneousMonomialIdeal& a) {
  if (a.ambient_dim() != f.ambient_dim()) throw std::invalid_argument("ideal and curve live on different P^n");
  Pullback out;
  bool any = false;
  for (const auto& g : a.generators()) {
    Polynomial comp = Polynomial::constant(GaussianRational(1));
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g[j] > 0) comp = comp * f.components()[j].pow(static_cast<unsigned>(g[j]));
    }
    if (comp.is_zero()) continue;
    any = true;
    out.gcd = gcd(out.gcd, comp);
  }
  if (!any) throw DomainError("curve_in_zero_set", "the curve lies inside the zero scheme of the ideal");
  out.zeros = zeros(out.gcd);
  return out;
}

double counting_from_zeros(std::span<const Zero> zeros, double r, bool truncated) {
  double s = 0;
  for (const auto& z : zeros) {
    const double mod = std::abs(z.z);
    if (mod >= r) continue;
    const double mult = truncated ? 1.0 : static_cast<double>(z.multiplicity);
    s += mult * (mod == 0.0 ? std::log(r) : std::log(r / mod));
  }
  return s;
}

double proximity_curve(const PolynomialCurve& f, const HomogeneousMonomialIdeal& a, double r,
                       const QuadratureOptions& opts) {
  pull_back(f, a);  // rejects curves inside the zero scheme
  std::vector<std::complex<double>> x(f.components().size());
  return circle_average(
      [&](std::complex<double> z) {
        for (std::size_t j = 0; j < x.size(); ++j) x[j] = f.components()[j](z);
        return weil_archimedean(a, x);
      },
      r, opts);
}

double counting_curve(const PolynomialCurve& f, const HomogeneousMonomialIdeal& a, double r) {
  return counting_from_zeros(pull_back(f, a).zeros, r, false);
}

double truncated_counting_curve(const PolynomialCurve& f, const HomogeneousMonomialIdeal& a, double r) {
  return counting_from_zeros(pull_back(f, a).zeros, r, true);
}

double ideal_characteristic(const PolynomialCurve& f, const HomogeneousMonomialIdeal& a, double r,
                            const QuadratureOptions& opts) {
  return proximity_curve(f, a, r, opts) + counting_curve(f, a, r);
}

std::vector<CurveFunctionRow> tabulate(const PolynomialCurve& f, const HomogeneousMonomialIdeal& a,
                                       const RadiusGrid& grid, const QuadratureOptions& opts) {
  const Pullback pb = pull_back(f, a);
  std::vector<CurveFunctionRow> rows;
  for (double r : grid.radii()) {
    CurveFunctionRow row;
    row.r = r;
    row.characteristic = characteristic(f, r, opts);
    row.proximity = proximity_curve(f, a, r, opts);
    row.counting = counting_from_zeros(pb.zeros, r, false);
    row.truncated = counting_from_zeros(pb.zeros, r, true);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace mulideal
