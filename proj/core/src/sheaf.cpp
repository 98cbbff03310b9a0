#include "mulideal/sheaf.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mulideal/multiplier.hpp"

namespace mulideal {
namespace {

template <typename F>
HomogeneousMonomialIdeal chartwise(const HomogeneousMonomialIdeal& a, F&& op) {
  std::vector<MonomialIdeal> charts;
  for (std::size_t i = 0; i <= a.ambient_dim(); ++i) charts.push_back(op(dehomogenize(a, i)));
  return glue_charts(charts);
}

}  // namespace

HomogeneousMonomialIdeal glue_charts(const std::vector<MonomialIdeal>& charts) {
  if (charts.size() < 2) throw std::invalid_argument("P^n needs at least two charts");
  const std::size_t n = charts.size() - 1;
  if (std::all_of(charts.begin(), charts.end(), [](const MonomialIdeal& j) { return j.is_unit(); })) {
    return HomogeneousMonomialIdeal::unit(n);
  }
  std::int64_t max_degree = 0;
  std::int64_t max_exponent = 0;
  for (const auto& j : charts) {
    if (j.dim() != n) throw std::invalid_argument("chart ideal dimension mismatch");
    for (const auto& g : j.generators()) {
      max_degree = std::max(max_degree, std::accumulate(g.begin(), g.end(), std::int64_t{0}));
      max_exponent = std::max(max_exponent, *std::max_element(g.begin(), g.end()));
    }
  }
  // Generators coming from another chart need enough x_i padding to land in
  // the chart ideal; max_degree + max_exponent always suffices.
  for (std::int64_t d = max_degree; d <= max_degree + max_exponent + 1; ++d) {
    std::vector<ExponentVector> gens;
    for (std::size_t i = 0; i <= n; ++i) {
      const auto h = homogenize(charts[i], d, i);
      gens.insert(gens.end(), h.generators().begin(), h.generators().end());
    }
    auto glued = HomogeneousMonomialIdeal::from_generators(std::move(gens));
    bool ok = true;
    for (std::size_t i = 0; i <= n && ok; ++i) ok = dehomogenize(glued, i) == charts[i];
    if (ok) return glued;
  }
  throw std::logic_error("chart ideals do not glue to an ideal sheaf");
}

HomogeneousMonomialIdeal projective_multiplier_ideal(const HomogeneousMonomialIdeal& a, const Rational& c) {
  return chartwise(a, [&](const MonomialIdeal& j) { return multiplier_ideal(j, c); });
}

HomogeneousMonomialIdeal projective_multiplier_ideal_minus(const HomogeneousMonomialIdeal& a, const Rational& c) {
  return chartwise(a, [&](const MonomialIdeal& j) { return multiplier_ideal_minus(j, c); });
}

}  // namespace mulideal
