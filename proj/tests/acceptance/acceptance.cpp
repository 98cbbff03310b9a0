// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "mulideal/blowup.hpp"
#include "mulideal/conjecture.hpp"
#include "mulideal/multiplier.hpp"
#include "mulideal/nevanlinna.hpp"

using namespace mulideal;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Polynomial poly(std::initializer_list<long> coeffs) {
  std::vector<GaussianRational> c;
  for (long v : coeffs) c.emplace_back(Rational(v));
  return Polynomial(std::move(c));
}

MonomialIdeal ideal(std::vector<ExponentVector> gens) { return MonomialIdeal::minimalize(std::move(gens)); }

Outcome left_limit_identity() {
  Outcome o;
  const auto sweep = sweep_left_limit_identity(6, 4);
  o.require(sweep.checked == 7 + 49 + 343 + 2401, "unexpected divisor count");
  o.require(sweep.failures.empty(), std::to_string(sweep.failures.size()) + " divisors violate the identity");
  o.detail = o.ok ? std::to_string(sweep.checked) + " divisors" : o.detail;
  return o;
}

Outcome stabilization() {
  Outcome o;
  std::vector<MonomialIdeal> corpus = {
      ideal({{2, 0}, {0, 3}}),         ideal({{1, 0}, {0, 1}}),         ideal({{2, 0}, {1, 1}, {0, 2}}),
      ideal({{3, 1}}),                 ideal({{4, 0}, {1, 1}, {0, 5}}), ideal({{3, 0}, {2, 1}, {0, 4}}),
      ideal({{1, 2, 3}}),              ideal({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), ideal({{2, 0, 0}, {0, 3, 0}, {0, 0, 4}}),
      ideal({{1, 1, 0}, {0, 1, 1}}),   ideal({{5}}),                    ideal({{2, 3}}),
  };
  testing::Gen gen(2024);
  while (corpus.size() < 24) {
    const auto a = gen.ideal(static_cast<std::size_t>(gen.uniform(1, 3)), 3, 3);
    if (!a.is_unit()) corpus.push_back(a);
  }
  std::size_t checked = 0;
  for (const auto& a : corpus) {
    const NewtonPolyhedron p(a);
    const auto lcm = candidate_denominator_lcm(p);
    const std::int64_t first = to_int64(Integer(lcm + 1));
    for (const auto& c : jump_candidates(p, make_rational(2))) {
      const auto minus = multiplier_ideal_minus(p, c);
      for (std::int64_t k = first; k <= 2 * first; ++k) {
        o.require(multiplier_ideal(p, c - make_rational(1, k)) == minus, "no stabilization at c = " + to_string(c));
      }
      ++checked;
    }
  }
  if (o.ok) o.detail = std::to_string(corpus.size()) + " ideals, " + std::to_string(checked) + " candidates";
  return o;
}

Outcome lct_oracle() {
  Outcome o;
  const auto m = ideal({{1, 0}, {0, 1}});
  const auto agree = [&](const MonomialIdeal& a, const Rational& expected, const std::string& name) {
    o.require(lct(a) == expected, "facet formula for " + name);
    o.require(lct_by_bisection(a) == expected, "bisection for " + name);
  };
  agree(m, make_rational(2), "(x,y)");
  for (unsigned k = 1; k <= 6; ++k) agree(m.power(k), make_rational(2, k), "(x,y)^" + std::to_string(k));
  for (std::int64_t a = 1; a <= 5; ++a) {
    for (std::int64_t b = 1; b <= 5; ++b) {
      agree(ideal({{a, 0}, {0, b}}), make_rational(1, a) + make_rational(1, b),
            "(x^" + std::to_string(a) + ",y^" + std::to_string(b) + ")");
    }
  }
  if (o.ok) o.detail = "32 ideals";
  return o;
}

Outcome weil_laws() {
  Outcome o;
  testing::Gen gen(4);
  struct Pair {
    HomogeneousMonomialIdeal a, b;
  };
  std::vector<Pair> pairs;
  while (pairs.size() < 20) {
    const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 3));
    pairs.push_back({gen.homogeneous(n, gen.uniform(1, 3), 3), gen.homogeneous(n, gen.uniform(1, 3), 3)});
  }
  for (int i = 0; i < 1000; ++i) {
    const auto& [a, b] = pairs[static_cast<std::size_t>(i % 20)];
    const auto sum = a + b;
    const auto p = gen.point(a.ambient_dim() + 1, 1000, true);
    const auto v = Place::prime(gen.prime());
    const auto inf = Place::infinity();
    const auto la = weil_local(a, p, v).multiplicity;
    const auto lb = weil_local(b, p, v).multiplicity;
    const auto ls = weil_local(sum, p, v).multiplicity;
    o.require(ls == std::min(la, lb), "min-rule at a prime");
    o.require(la >= ls && lb >= ls, "monotonicity at a prime");
    const double ia = weil_local(a, p, inf).archimedean;
    const double ib = weil_local(b, p, inf).archimedean;
    const double is = weil_local(sum, p, inf).archimedean;
    o.require(std::fabs(is - std::min(ia, ib)) <= 1e-12, "min-rule at infinity");
    o.require(ia >= is - 1e-12 && ib >= is - 1e-12, "monotonicity at infinity");
    PlaceSet s;
    s.primes.insert(v.prime());
    const auto m = proximity(a, p, s);
    const auto n = counting(a, p, s);
    const auto h = height_ideal(a, p);
    o.require((m + n).finite == h.finite, "m + N = h at finite places");
    o.require(std::fabs(m.archimedean + n.archimedean - h.archimedean) <= 1e-9, "m + N = h at infinity");
  }
  if (o.ok) o.detail = "1000 (point, prime) pairs over 20 ideal pairs";
  return o;
}

Outcome reduction() {
  Outcome o;
  testing::Gen gen(5);
  std::vector<RationalPoint> pts;
  for (int i = 0; i < 500; ++i) pts.push_back(gen.point(3, 10000, false));
  const std::vector<PolynomialCurve> curves = {
      PolynomialCurve({poly({1}), poly({0, 1}), poly({0, 0, 1})}),
      PolynomialCurve({poly({1}), poly({1, 1}), poly({1, 0, 1})}),
  };
  const auto grid = RadiusGrid::range(2, 100, 1);
  const std::vector<std::vector<std::int64_t>> divisors = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0},
                                                           {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
  double worst = 0;
  for (const auto& d : divisors) {
    const auto check = reduction_check(d, pts, {}, grid);
    o.require(check.passed, "arithmetic reduction failed: " + (check.failures.empty() ? "" : check.failures.front()));
  }
  for (const auto& d : std::vector<std::vector<std::int64_t>>{{1, 0, 0}, {0, 1, 1}, {1, 1, 1}}) {
    const auto check = reduction_check(d, {}, curves, grid, {}, 1e-6);
    o.require(check.passed, "analytic reduction failed: " + (check.failures.empty() ? "" : check.failures.front()));
    worst = std::max(worst, check.max_analytic_deviation);
  }
  if (o.ok) {
    std::ostringstream ss;
    ss << "7 divisors x 500 points exact; analytic deviation " << worst;
    o.detail = ss.str();
  }
  return o;
}

Outcome first_main_theorem() {
  Outcome o;
  const PolynomialCurve f({poly({1}), poly({0, 1}), poly({0, 0, 1})});
  QuadratureOptions opts;
  opts.nodes = 4096;
  const auto grid = RadiusGrid::range(2, 100, 1);
  double worst = 0;
  for (std::size_t j = 0; j < 3; ++j) {
    ExponentVector e(3, 0);
    e[j] = 1;
    for (const auto& row : tabulate(f, HomogeneousMonomialIdeal::from_generators({e}), grid, opts)) {
      const double gap = std::fabs(row.proximity + row.counting - row.characteristic);
      worst = std::max(worst, gap);
      o.require(gap <= 1.0, "m + N - T too large at r = " + std::to_string(row.r));
    }
  }
  const double r = 1e4;
  const double slope = (characteristic(f, r * 1.01, opts) - characteristic(f, r, opts)) / std::log(1.01);
  o.require(std::fabs(slope - 2.0) <= 0.1, "slope " + std::to_string(slope));
  if (o.ok) {
    std::ostringstream ss;
    ss << "max |m + N - T| = " << worst << ", slope " << slope;
    o.detail = ss.str();
  }
  return o;
}

Outcome blowup_chain() {
  Outcome o;
  const auto grid = RadiusGrid::range(2, 100, 1);
  testing::Gen gen(7);
  std::vector<RationalPoint> pts;
  while (pts.size() < 200) {
    auto p = gen.point(3, 1000, false);
    if (p.coords()[1] != 0 || p.coords()[2] != 0) pts.push_back(p);
  }
  double worst_gap = 0;
  for (int m = 1; m <= 3; ++m) {
    const auto analytic = blowup_chain_check(m, std::nullopt, pinned_blowup_curves(), grid, 1.5);
    o.require(analytic.passed, "m = " + std::to_string(m) + ": " +
                                   (analytic.failures.empty() ? "" : analytic.failures.front()));
    for (const auto& t : analytic.curves) {
      for (const auto& row : t.rows) worst_gap = std::max(worst_gap, row.functoriality_gap);
    }
    const auto arithmetic = blowup_chain_check(m, std::nullopt, pts, 1.5);
    o.require(arithmetic.passed, "arithmetic m = " + std::to_string(m) + ": " +
                                     (arithmetic.failures.empty() ? "" : arithmetic.failures.front()));
  }
  if (o.ok) {
    std::ostringstream ss;
    ss << "m = 1..3, 3 curves x 99 radii, 200 points; max functoriality gap " << worst_gap;
    o.detail = ss.str();
  }
  return o;
}

std::string run_cli(const std::string& args, int& status) {
  const std::string cmd = std::string("\"") + MULIDEAL_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return {};
  }
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

Outcome determinism() {
  Outcome o;
  const std::string c = MULIDEAL_CORPUS_DIR;
  const std::vector<std::string> commands = {
      "mi --ideal " + c + "/ideals/x2y3.json --c 4/3",
      "mi --ideal " + c + "/ideals/x1sq_x0x2.json --c 3/2",
      "mi-minus --ideal " + c + "/ideals/threefold.json --c 1",
      "lct --ideal " + c + "/ideals/x2y3.json",
      "jump --ideal " + c + "/ideals/x2y3.json --cmax 3",
      "check-example-1-3 --max-mult 3 --max-dim 3",
      "weil --ideal " + c + "/ideals/x1sq_x0x2.json --points " + c + "/points/p2.txt",
      "prox --ideal " + c + "/ideals/x1x2_p2.json --points " + c + "/points/p2.txt --places inf,2,3",
      "count --ideal " + c + "/ideals/x1sq_x0x2.json --points " + c + "/points/p2.txt",
      "count1 --ideal " + c + "/ideals/x1x2_p2.json --points " + c + "/points/p2.txt",
      "height --ideal " + c + "/ideals/coordinate_lines_p2.json --points " + c + "/points/p2.txt",
      "curve --ideal " + c + "/ideals/x1x2_p2.json --curve " + c + "/curves/shifted.json --grid 2,10,100",
      "margins32 --ideal " + c + "/ideals/x1x2_p2.json --points " + c + "/points/p2.txt --eps 1/2",
      "margins42 --ideal " + c + "/ideals/x1x2_p2.json --points " + c + "/points/p2.txt --places inf,2",
      "margins31 --ideal " + c + "/ideals/x1x2_p2.json --curve " + c + "/curves/veronese.json --grid 2:20:2",
      "margins41 --ideal " + c + "/ideals/x1x2_p2.json --curve " + c + "/curves/cusp.json --grid 2:20:2",
      "check-reduction --divisor 1,1,1 --curve " + c + "/curves/veronese.json --samples 100 --seed 5 --grid 2,10",
      "check-blowup --m 2 --grid 2,10,50 --samples 50",
  };
  for (const auto& cmd : commands) {
    int s1 = 0, s2 = 0;
    const auto first = run_cli(cmd, s1);
    const auto second = run_cli(cmd, s2);
    o.require(s1 == 0 && s2 == 0, "nonzero exit: " + cmd);
    o.require(!first.empty(), "empty output: " + cmd);
    o.require(first == second, "output differs: " + cmd);
  }
  if (o.ok) o.detail = std::to_string(commands.size()) + " subcommands";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "left-limit identity for SNC monomial divisors", 5, left_limit_identity},
      {2, "left limit as stabilized I(a^{c-1/k})", 10, stabilization},
      {3, "lct: facet formula vs bisection oracle", 5, lct_oracle},
      {4, "Weil function laws", 10, weil_laws},
      {5, "reduction to the divisor case", 30, reduction},
      {6, "First Main Theorem sanity", 60, first_main_theorem},
      {7, "blow-up chains", 120, blowup_chain},
      {8, "CLI determinism", 60, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > c.limit_seconds) {
      o.ok = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s budget)";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " [" << timing << "] "
              << o.detail << std::endl;
    if (!o.ok) ++failed;
  }
  std::cout << (failed == 0 ? "all acceptance criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
