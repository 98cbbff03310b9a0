#include <benchmark/benchmark.h>

#include "mulideal/blowup.hpp"
#include "mulideal/multiplier.hpp"
#include "mulideal/nevanlinna.hpp"

namespace mulideal {
namespace {

void BM_FacetEnumeration(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < dim; ++i) {
    ExponentVector v(dim, 0);
    v[i] = static_cast<std::int64_t>(i + 2);
    gens.push_back(v);
  }
  gens.push_back(ExponentVector(dim, 1));
  const auto a = MonomialIdeal::minimalize(gens);
  for (auto _ : state) benchmark::DoNotOptimize(NewtonPolyhedron(a).facets().size());
}
BENCHMARK(BM_FacetEnumeration)->DenseRange(2, 5);

void BM_MultiplierIdeal(benchmark::State& state) {
  const auto a = MonomialIdeal::minimalize({{4, 0, 0}, {0, 5, 0}, {0, 0, 6}, {1, 1, 1}});
  const NewtonPolyhedron p(a);
  const Rational c = make_rational(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(multiplier_ideal(p, c));
}
BENCHMARK(BM_MultiplierIdeal)->Arg(1)->Arg(3)->Arg(6);

void BM_LctBisection(benchmark::State& state) {
  const auto a = MonomialIdeal::minimalize({{4, 0, 0}, {0, 5, 0}, {0, 0, 6}, {1, 1, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(lct_by_bisection(a));
}
BENCHMARK(BM_LctBisection);

void BM_LeftLimitSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_left_limit_identity(6, 3).checked);
}
BENCHMARK(BM_LeftLimitSweep)->Unit(benchmark::kMillisecond);

Polynomial poly(std::initializer_list<long> coeffs) {
  std::vector<GaussianRational> c;
  for (long v : coeffs) c.emplace_back(Rational(v));
  return Polynomial(std::move(c));
}

void BM_Characteristic(benchmark::State& state) {
  const PolynomialCurve f({poly({1}), poly({1, 1}), poly({1, 0, 1})});
  QuadratureOptions opts;
  opts.nodes = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(characteristic(f, 50.0, opts));
}
BENCHMARK(BM_Characteristic)->Arg(1024)->Arg(4096)->Unit(benchmark::kMicrosecond);

void BM_BlowupChain(benchmark::State& state) {
  const auto grid = RadiusGrid::parse("2,10,100");
  for (auto _ : state) benchmark::DoNotOptimize(blowup_chain_check(3, std::nullopt, pinned_blowup_curves(), grid).passed);
}
BENCHMARK(BM_BlowupChain)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace mulideal

BENCHMARK_MAIN();
