#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mulideal/rational.hpp"

namespace mulideal {

// Exact element re + i*im of Q(i).
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
  // "a/b" or "a/b+c/di" style; the inverse of parse_gaussian.
  std::string to_string() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) { return a.re == b.re && a.im == b.im; }
};

// Univariate polynomial over Q(i), coefficients in ascending degree, no
// trailing zeros (the zero polynomial has no coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<GaussianRational> coeffs);
  static Polynomial constant(GaussianRational c) { return Polynomial({std::move(c)}); }
  static Polynomial monomial(std::size_t degree, GaussianRational c = GaussianRational(1));

  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  const std::vector<GaussianRational>& coeffs() const noexcept { return coeffs_; }
  GaussianRational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : GaussianRational(); }
  const GaussianRational& leading() const { return coeffs_.back(); }

  // Multiplicity of the root z = 0.
  int order_at_zero() const;

  Polynomial monic() const;
  Polynomial derivative() const;
  Polynomial pow(unsigned k) const;

  std::complex<double> operator()(std::complex<double> z) const;
  std::complex<long double> evaluate(std::complex<long double> z) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();
  std::vector<GaussianRational> coeffs_;
};

// Quotient and remainder; throws std::domain_error on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
// Exact division; throws std::domain_error if the remainder is nonzero.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);
// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Yun's algorithm: p = lc * prod_k s_k^k with squarefree, pairwise coprime s_k.
// Returns the nonconstant (s_k, k).
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);

struct Zero {
  std::complex<double> z;
  int multiplicity = 1;
};

// Roots of a squarefree polynomial (Aberth iteration, Newton polish).
std::vector<std::complex<double>> simple_roots(const Polynomial& p);
// All zeros with multiplicities. z = 0 is reported exactly.
std::vector<Zero> zeros(const Polynomial& p);

GaussianRational parse_gaussian(std::string_view text);

}  // namespace mulideal
