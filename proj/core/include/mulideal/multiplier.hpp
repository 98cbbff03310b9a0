#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mulideal/monomial_ideal.hpp"
#include "mulideal/polyhedra.hpp"
#include "mulideal/rational.hpp"

namespace mulideal {

// Multiplier ideals of monomial ideals through the Newton polyhedron:
// x^v is in I(a^c) iff v + (1,...,1) lies in the interior of c*Newt(a), and
// x^v is in the left limit I^-(a^c) iff v + (1,...,1) lies in c*Newt(a).
// c = 0 gives the unit ideal in both cases. Negative c throws std::invalid_argument.
MonomialIdeal multiplier_ideal(const MonomialIdeal& a, const Rational& c);
MonomialIdeal multiplier_ideal_minus(const MonomialIdeal& a, const Rational& c);

// Overloads reusing an already built polyhedron of `a`.
MonomialIdeal multiplier_ideal(const NewtonPolyhedron& p, const Rational& c);
MonomialIdeal multiplier_ideal_minus(const NewtonPolyhedron& p, const Rational& c);

// Componentwise box B with every minimal generator of I(a^c) and I^-(a^c)
// inside [0, B]: B_i = ceil(c * max_g g_i) + n, and B = 0 for c = 0.
ExponentVector generator_bound(const MonomialIdeal& a, const Rational& c);

// Log canonical threshold min_F <normal, 1> / offset over nontrivial facets.
// std::nullopt stands for +infinity (the unit ideal).
std::optional<Rational> lct(const MonomialIdeal& a);
std::optional<Rational> lct(const NewtonPolyhedron& p);

// Independent route: Stern-Brocot descent on c, deciding c < lct, c = lct or
// c > lct from LP membership of (1,...,1) in c*Newt(a). Never touches facets.
std::optional<Rational> lct_by_bisection(const MonomialIdeal& a);

// Values <normal, v + 1> / offset over nontrivial facets and lattice points v
// in generator_bound(a, cmax), restricted to (0, cmax]; sorted, unique.
std::vector<Rational> jump_candidates(const NewtonPolyhedron& p, const Rational& cmax);

struct JumpingSpectrum {
  std::vector<Rational> thresholds;   // strictly increasing, in (0, cmax]
  // ideals[0] holds on [0, thresholds[0]); ideals[k] on [thresholds[k-1], thresholds[k]).
  std::vector<MonomialIdeal> ideals;
};

// Throws std::invalid_argument for cmax <= 0.
JumpingSpectrum jumping_numbers(const MonomialIdeal& a, const Rational& cmax);

// Least common multiple of the nontrivial facet offsets: every jump candidate
// has a denominator dividing it (1 for the unit ideal).
Integer candidate_denominator_lcm(const NewtonPolyhedron& p);

// Effective divisor sum_i m_i {x_i = 0} with simple normal crossings support.
struct SncMonomialDivisor {
  ExponentVector multiplicities;

  // Principal ideal (x^D). Throws std::invalid_argument on negative entries.
  MonomialIdeal ideal() const;
  // D - D_red.
  SncMonomialDivisor minus_reduced() const;
};

// I^-(O(-D)) at c = 1 equals O(-(D - D_red)).
bool check_left_limit_identity(const SncMonomialDivisor& d);

struct IdentitySweep {
  std::size_t checked = 0;
  std::vector<ExponentVector> failures;
};

// Every D with 1 <= dim <= max_dim and multiplicities in [0, max_mult].
IdentitySweep sweep_left_limit_identity(std::int64_t max_mult, std::size_t max_dim);

}  // namespace mulideal
