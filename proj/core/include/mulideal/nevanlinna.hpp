#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "mulideal/arithmetic.hpp"
#include "mulideal/polynomial.hpp"

namespace mulideal {

// Entire curve C -> P^n, z -> [f_0(z) : ... : f_n(z)], with no common zero.
class PolynomialCurve {
 public:
  // Throws DomainError("constant_curve") when every component is constant and
  // DomainError("degenerate_curve") when the components share a root or all vanish.
  explicit PolynomialCurve(std::vector<Polynomial> components);

  std::size_t ambient_dim() const noexcept { return components_.size() - 1; }
  const std::vector<Polynomial>& components() const noexcept { return components_; }
  int max_degree() const noexcept;

 private:
  std::vector<Polynomial> components_;
};

// Strictly increasing positive radii.
class RadiusGrid {
 public:
  // Throws std::invalid_argument if empty, nonpositive or not increasing.
  explicit RadiusGrid(std::vector<double> radii);
  // "a,b,c" or "start:stop:step".
  static RadiusGrid parse(std::string_view text);
  // start, start+step, ..., <= stop
  static RadiusGrid range(double start, double stop, double step);

  const std::vector<double>& radii() const noexcept { return radii_; }

 private:
  std::vector<double> radii_;
};

// Periodic trapezoid rule on |z| = r; the node count doubles until two
// successive estimates differ by less than `tolerance`.
struct QuadratureOptions {
  std::size_t nodes = 4096;
  double tolerance = 1e-6;
  std::size_t max_nodes = std::size_t{1} << 20;
};

// (1/2pi) int_0^{2pi} phi(r e^{i theta}) d theta.
double circle_average(const std::function<double(std::complex<double>)>& phi, double r,
                      const QuadratureOptions& opts = {});

// Cartan characteristic of a polynomial tuple:
// (1/2pi) int log max_j |f_j(r e^{i theta})| d theta - log max_j |f_j(0)|.
// Components may be constant; they must not all vanish at 0.
double cartan_characteristic(std::span<const Polynomial> components, double r, const QuadratureOptions& opts = {});
double characteristic(const PolynomialCurve& f, double r, const QuadratureOptions& opts = {});

// Archimedean Weil function of a homogeneous monomial ideal at a complex point.
double weil_archimedean(const HomogeneousMonomialIdeal& a, std::span<const std::complex<double>> x);

// Zero divisor of the pulled-back ideal f^*a: h = gcd_g (g o f).
struct Pullback {
  Polynomial gcd;
  std::vector<Zero> zeros;
};

// Throws DomainError("curve_in_zero_set") when f(C) lies inside the zero scheme of a.
Pullback pull_back(const PolynomialCurve& f, const HomogeneousMonomialIdeal& a);

// sum_{0 < |z| < r} mult log(r/|z|) + mult_0 log r; each mult capped at 1 when truncated.
double counting_from_zeros(std::span<const Zero> zeros, double r, bool truncated);

double proximity_curve(const PolynomialCurve& f, const HomogeneousMonomialIdeal& a, double r,
                       const QuadratureOptions& opts = {});
double counting_curve(const PolynomialCurve& f, const HomogeneousMonomialIdeal& a, double r);
double truncated_counting_curve(const PolynomialCurve& f, const HomogeneousMonomialIdeal& a, double r);
// T_{a,f} := m_f(a, r) + N_f(a, r).
double ideal_characteristic(const PolynomialCurve& f, const HomogeneousMonomialIdeal& a, double r,
                            const QuadratureOptions& opts = {});

struct CurveFunctionRow {
  double r = 0;
  double characteristic = 0;  // T_f
  double proximity = 0;       // m_f(a)
  double counting = 0;        // N_f(a)
  double truncated = 0;       // N_f^(1)(a)
  double ideal_characteristic() const { return proximity + counting; }
};

std::vector<CurveFunctionRow> tabulate(const PolynomialCurve& f, const HomogeneousMonomialIdeal& a,
                                       const RadiusGrid& grid, const QuadratureOptions& opts = {});

}  // namespace mulideal
