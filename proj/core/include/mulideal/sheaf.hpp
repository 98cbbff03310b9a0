#pragma once

#include <vector>

#include "mulideal/arithmetic.hpp"
#include "mulideal/monomial_ideal.hpp"
#include "mulideal/rational.hpp"

namespace mulideal {

// Multiplier ideals of the ideal sheaf of a homogeneous monomial ideal on P^n,
// computed on each standard chart {x_i != 0} and glued back into one
// homogeneous ideal.
HomogeneousMonomialIdeal projective_multiplier_ideal(const HomogeneousMonomialIdeal& a, const Rational& c);
HomogeneousMonomialIdeal projective_multiplier_ideal_minus(const HomogeneousMonomialIdeal& a, const Rational& c);

// Homogeneous ideal whose dehomogenization at x_i is charts[i] for every i.
// The charts must describe one ideal sheaf (agree on overlaps); throws
// std::logic_error if no padding degree reproduces them.
HomogeneousMonomialIdeal glue_charts(const std::vector<MonomialIdeal>& charts);

}  // namespace mulideal
