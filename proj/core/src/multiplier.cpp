#include "mulideal/multiplier.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mulideal {
namespace {

void check_coefficient(const Rational& c) {
  if (c < 0) throw std::invalid_argument("coefficient c must be nonnegative, got " + to_string(c));
}

// Minimal elements of an upward-closed set of lattice points, found by
// scanning the box [0, bound] with `member`.
template <typename Pred>
MonomialIdeal minimal_members(const ExponentVector& bound, const Pred& member) {
  const LatticeBox box(bound);
  const std::size_t n = bound.size();
  std::vector<std::uint64_t> stride(n, 1);
  for (std::size_t i = n - 1; i > 0; --i) stride[i - 1] = stride[i] * static_cast<std::uint64_t>(bound[i] + 1);

  std::vector<char> in(box.size(), 0);
  std::vector<ExponentVector> gens;
  std::uint64_t idx = 0;
  for (const auto& v : box) {
    if (member(std::span<const std::int64_t>(v))) {
      in[idx] = 1;
      bool minimal = true;
      for (std::size_t i = 0; i < n && minimal; ++i) {
        if (v[i] > 0 && in[idx - stride[i]]) minimal = false;
      }
      if (minimal) gens.push_back(v);
    }
    ++idx;
  }
  if (gens.empty()) throw std::logic_error("generator search box contains no member; bound too small");
  return MonomialIdeal::minimalize(std::move(gens));
}

MonomialIdeal multiplier_impl(const NewtonPolyhedron& p, const Rational& c, Membership mode) {
  check_coefficient(c);
  const std::size_t n = p.dim();
  if (c == 0) return MonomialIdeal::unit(n);
  const ScaledMembership member(p, c, mode);
  ExponentVector shifted(n);
  return minimal_members(generator_bound(p.ideal(), c), [&](std::span<const std::int64_t> v) {
    for (std::size_t i = 0; i < n; ++i) shifted[i] = v[i] + 1;
    return member(shifted);
  });
}

}  // namespace

MonomialIdeal multiplier_ideal(const NewtonPolyhedron& p, const Rational& c) {
  return multiplier_impl(p, c, Membership::strict);
}

MonomialIdeal multiplier_ideal_minus(const NewtonPolyhedron& p, const Rational& c) {
  return multiplier_impl(p, c, Membership::closed);
}

MonomialIdeal multiplier_ideal(const MonomialIdeal& a, const Rational& c) {
  check_coefficient(c);
  if (c == 0) return MonomialIdeal::unit(a.dim());
  return multiplier_ideal(NewtonPolyhedron(a), c);
}

MonomialIdeal multiplier_ideal_minus(const MonomialIdeal& a, const Rational& c) {
  check_coefficient(c);
  if (c == 0) return MonomialIdeal::unit(a.dim());
  return multiplier_ideal_minus(NewtonPolyhedron(a), c);
}

ExponentVector generator_bound(const MonomialIdeal& a, const Rational& c) {
  check_coefficient(c);
  const std::size_t n = a.dim();
  if (c == 0) return ExponentVector(n, 0);
  auto bound = a.max_exponents();
  for (auto& b : bound) b = to_int64(ceil(c * static_cast<long>(b))) + static_cast<std::int64_t>(n);
  return bound;
}

std::optional<Rational> lct(const NewtonPolyhedron& p) {
  std::optional<Rational> best;
  for (const auto& f : p.nontrivial_facets()) {
    std::int64_t sum = 0;
    for (auto w : f.normal) sum += w;
    const Rational t = make_rational(sum, f.offset);
    if (!best || t < *best) best = t;
  }
  return best;
}

std::optional<Rational> lct(const MonomialIdeal& a) { return lct(NewtonPolyhedron(a)); }

std::optional<Rational> lct_by_bisection(const MonomialIdeal& a) {
  const std::size_t n = a.dim();
  const std::vector<Rational> ones(n, Rational(1));
  const auto below = [&](const Rational& c) { return contains_lp(a, ones, c, Membership::strict); };
  const auto at_most = [&](const Rational& c) { return contains_lp(a, ones, c, Membership::closed); };

  // lct(a) <= lct(x_1, ..., x_n) = n for every proper ideal.
  if (below(Rational(static_cast<long>(n + 1)))) return std::nullopt;

  // Stern-Brocot descent between 0/1 and 1/0.
  Integer ln = 0, ld = 1, rn = 1, rd = 0;
  for (int step = 0; step < 1'000'000; ++step) {
    Rational mid(Integer(ln + rn), Integer(ld + rd));
    mid.canonicalize();
    if (below(mid)) {
      ln += rn;
      ld += rd;
    } else if (at_most(mid)) {
      return mid;
    } else {
      rn += ln;
      rd += ld;
    }
  }
  throw std::runtime_error("lct bisection did not terminate");
}

Integer candidate_denominator_lcm(const NewtonPolyhedron& p) {
  Integer l = 1;
  for (const auto& f : p.nontrivial_facets()) {
    const Integer off(static_cast<long>(f.offset));
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), off.get_mpz_t());
  }
  return l;
}

std::vector<Rational> jump_candidates(const NewtonPolyhedron& p, const Rational& cmax) {
  if (cmax <= 0) throw std::invalid_argument("cmax must be positive, got " + to_string(cmax));
  std::set<Rational> out;
  const auto facets = p.nontrivial_facets();
  if (facets.empty()) return {};
  const LatticeBox box(generator_bound(p.ideal(), cmax));
  for (const auto& f : facets) {
    std::int64_t base = 0;
    for (auto w : f.normal) base += w;
    std::set<std::int64_t> sums;
    for (const auto& v : box) {
      std::int64_t s = base;
      for (std::size_t i = 0; i < v.size(); ++i) s += f.normal[i] * v[i];
      sums.insert(s);
    }
    for (auto s : sums) {
      const Rational xi = make_rational(s, f.offset);
      if (xi > cmax) break;
      out.insert(xi);
    }
  }
  return {out.begin(), out.end()};
}

JumpingSpectrum jumping_numbers(const MonomialIdeal& a, const Rational& cmax) {
  if (cmax <= 0) throw std::invalid_argument("cmax must be positive, got " + to_string(cmax));
  const NewtonPolyhedron p(a);
  JumpingSpectrum spec;
  spec.ideals.push_back(MonomialIdeal::unit(a.dim()));
  for (const auto& xi : jump_candidates(p, cmax)) {
    auto at = multiplier_ideal(p, xi);
    if (at != multiplier_ideal_minus(p, xi)) {
      spec.thresholds.push_back(xi);
      spec.ideals.push_back(std::move(at));
    }
  }
  return spec;
}

MonomialIdeal SncMonomialDivisor::ideal() const {
  if (multiplicities.empty()) throw std::invalid_argument("divisor needs at least one coordinate");
  if (std::any_of(multiplicities.begin(), multiplicities.end(), [](std::int64_t m) { return m < 0; })) {
    throw std::invalid_argument("divisor multiplicities must be nonnegative");
  }
  return MonomialIdeal::principal(multiplicities);
}

SncMonomialDivisor SncMonomialDivisor::minus_reduced() const {
  SncMonomialDivisor d{multiplicities};
  for (auto& m : d.multiplicities) {
    if (m > 0) --m;
  }
  return d;
}

bool check_left_limit_identity(const SncMonomialDivisor& d) {
  return multiplier_ideal_minus(d.ideal(), Rational(1)) == d.minus_reduced().ideal();
}

IdentitySweep sweep_left_limit_identity(std::int64_t max_mult, std::size_t max_dim) {
  if (max_mult < 0) throw std::invalid_argument("max_mult must be >= 0");
  if (max_dim < 1 || max_dim > kMaxPolyhedronDim) {
    throw std::invalid_argument("max_dim must lie in [1, " + std::to_string(kMaxPolyhedronDim) + "]");
  }
  IdentitySweep out;
  for (std::size_t n = 1; n <= max_dim; ++n) {
    for (const auto& v : lattice_points_box(ExponentVector(n, max_mult))) {
      SncMonomialDivisor d{ExponentVector(v.begin(), v.end())};
      if (!check_left_limit_identity(d)) out.failures.push_back(d.multiplicities);
      ++out.checked;
    }
  }
  return out;
}

}  // namespace mulideal
