#include "mulideal/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mulideal/errors.hpp"

namespace mulideal {

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  if (a.im == 0 && b.im == 0) return {a.re * b.re, 0};
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero in Q(i)");
  if (b.im == 0) return {a.re / b.re, a.im / b.re};
  const Rational norm = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / norm, (a.im * b.re - a.re * b.im) / norm};
}

std::string GaussianRational::to_string() const {
  if (im == 0) return mulideal::to_string(re);
  std::string imag = mulideal::to_string(im) + "i";
  if (re == 0) return imag;
  return mulideal::to_string(re) + (im > 0 ? "+" : "") + imag;
}

GaussianRational parse_gaussian(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw ParseError("empty complex coefficient");
  if (s.back() != 'i') return {parse_rational(s), 0};
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  const std::string real_part = split == std::string::npos ? "" : s.substr(0, split);
  std::string imag_part = split == std::string::npos ? s : s.substr(split);
  if (imag_part.empty() || imag_part == "+" || imag_part == "-") imag_part += "1";
  return {real_part.empty() ? Rational(0) : parse_rational(real_part), parse_rational(imag_part)};
}

Polynomial::Polynomial(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(std::size_t degree, GaussianRational c) {
  std::vector<GaussianRational> v(degree + 1);
  v[degree] = std::move(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

int Polynomial::order_at_zero() const {
  if (is_zero()) throw std::domain_error("order of the zero polynomial");
  int k = 0;
  while (coeffs_[static_cast<std::size_t>(k)].is_zero()) ++k;
  return k;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const GaussianRational lc = leading();
  std::vector<GaussianRational> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c / lc);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<GaussianRational> v(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    v[k - 1] = coeffs_[k] * GaussianRational(Rational(static_cast<long>(k)));
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = constant(GaussianRational(1));
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::complex<double> Polynomial::operator()(std::complex<double> z) const {
  std::complex<double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->to_complex();
  return acc;
}

std::complex<long double> Polynomial::evaluate(std::complex<long double> z) const {
  std::complex<long double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + std::complex<long double>(it->re.get_d(), it->im.get_d());
  }
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<GaussianRational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) + b.coeff(k);
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<GaussianRational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) - b.coeff(k);
  return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<GaussianRational> rem = a.coeffs();
  std::vector<GaussianRational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const auto& bc = b.coeffs();
  const GaussianRational& lc = b.leading();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const auto top = static_cast<std::size_t>(k + b.degree());
    if (rem[top].is_zero()) continue;
    const GaussianRational q = rem[top] / lc;
    quot[static_cast<std::size_t>(k)] = q;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= q * bc[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("polynomial division leaves a remainder");
  return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
  std::vector<std::pair<Polynomial, int>> out;
  if (p.is_constant()) return out;
  const Polynomial f = p.monic();
  const Polynomial df = f.derivative();
  Polynomial a = gcd(f, df);
  Polynomial b = exact_quotient(f, a);
  Polynomial c = exact_quotient(df, a);
  Polynomial d = c - b.derivative();
  int k = 1;
  while (!b.is_constant()) {
    Polynomial s = gcd(b, d);
    if (!s.is_constant()) out.emplace_back(s, k);
    b = exact_quotient(b, s);
    c = exact_quotient(d, s);
    d = c - b.derivative();
    ++k;
  }
  return out;
}

std::vector<std::complex<double>> simple_roots(const Polynomial& p) {
  using cld = std::complex<long double>;
  const int n = p.degree();
  if (n <= 0) return {};
  const Polynomial dp = p.derivative();
  std::vector<cld> a;
  for (const auto& c : p.coeffs()) a.emplace_back(c.re.get_d(), c.im.get_d());
  if (n == 1) {
    const cld r = -a[0] / a[1];
    return {std::complex<double>(static_cast<double>(r.real()), static_cast<double>(r.imag()))};
  }

  long double radius = 0;
  for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(a[static_cast<std::size_t>(k)] / a.back()));
  radius = std::min<long double>(1 + radius, std::pow(std::abs(a[0] / a.back()), 1.0L / n) + 1);

  std::vector<cld> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const long double ang = 2 * std::numbers::pi_v<long double> * k / n + 0.4L;
    z[static_cast<std::size_t>(k)] = std::polar(radius, ang);
  }
  for (int iter = 0; iter < 1000; ++iter) {
    long double worst = 0;
    for (std::size_t k = 0; k < z.size(); ++k) {
      const cld f = p.evaluate(z[k]);
      if (f == cld(0)) continue;
      const cld ratio = f / dp.evaluate(z[k]);
      cld s = 0;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != k) s += 1.0L / (z[k] - z[j]);
      }
      const cld w = ratio / (1.0L - ratio * s);
      z[k] -= w;
      worst = std::max(worst, std::abs(w) / std::max<long double>(1, std::abs(z[k])));
    }
    if (worst < 1e-18L) break;
  }
  for (auto& r : z) {
    for (int it = 0; it < 3; ++it) {
      const cld d = dp.evaluate(r);
      if (d == cld(0)) break;
      r -= p.evaluate(r) / d;
    }
  }
  std::vector<std::complex<double>> out;
  out.reserve(z.size());
  for (const auto& r : z) out.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
  return out;
}

std::vector<Zero> zeros(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("zeros of the zero polynomial");
  std::vector<Zero> out;
  const int k0 = p.order_at_zero();
  if (k0 > 0) out.push_back({{0.0, 0.0}, k0});
  std::vector<GaussianRational> shifted(p.coeffs().begin() + k0, p.coeffs().end());
  for (const auto& [factor, mult] : squarefree_decomposition(Polynomial(std::move(shifted)))) {
    for (const auto& r : simple_roots(factor)) out.push_back({r, mult});
  }
  return out;
}

}  // namespace mulideal
