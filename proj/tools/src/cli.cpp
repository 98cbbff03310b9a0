#include "mulideal_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "mulideal/blowup.hpp"
#include "mulideal/conjecture.hpp"
#include "mulideal/errors.hpp"
#include "mulideal/io.hpp"
#include "mulideal/multiplier.hpp"
#include "mulideal/nevanlinna.hpp"
#include "mulideal/sheaf.hpp"

namespace mulideal::cli {
namespace {

using io::Json;

struct RunConfig {
  std::string ideal;
  std::vector<std::string> point;
  std::string points;
  std::vector<std::string> curve;
  std::string places;
  std::string c;
  std::string eps = "1/10";
  std::string eta;
  std::string cmax = "1";
  std::string grid = "2,5,10,20,50,100";
  std::size_t nodes = 4096;
  std::string format = "json";
  std::string out;
  std::string divisor;
  int m = 2;
  double slack = 0;
  double constant = 1.5;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  std::int64_t height = 1000;
  std::int64_t max_mult = 6;
  std::size_t max_dim = 4;
};

class Output {
 public:
  Output(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  void json(const Json& j) { write(j.dump(2) + "\n"); }
  void table(const Json& j, const std::function<std::string()>& csv) {
    if (cfg_.format == "csv") {
      write(csv());
    } else {
      json(j);
    }
  }

 private:
  void write(const std::string& text) {
    if (cfg_.out.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(cfg_.out, std::ios::binary);
    if (!f) throw ParseError("cannot write " + cfg_.out);
    f << text;
  }

  const RunConfig& cfg_;
  std::ostream& out_;
};

Rational parse_param(const std::string& text, const char* name) {
  try {
    return parse_rational(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("--") + name + ": " + e.what());
  }
}

RationalPoint parse_point_arg(const std::string& text) {
  try {
    return RationalPoint::parse(text);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError("bad point \"" + text + "\": " + e.what());
  }
}

std::vector<RationalPoint> sample_points(std::size_t coords, std::size_t count, std::uint64_t seed,
                                         std::int64_t height) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(-height, height);
  std::vector<RationalPoint> out;
  while (out.size() < count) {
    std::vector<std::int64_t> x(coords);
    for (auto& v : x) v = coord(rng);
    if (std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v == 0; })) continue;
    out.emplace_back(std::move(x));
  }
  return out;
}

std::vector<RationalPoint> gather_points(const RunConfig& cfg, std::size_t coords) {
  std::vector<RationalPoint> pts;
  for (const auto& p : cfg.point) pts.push_back(parse_point_arg(p));
  if (!cfg.points.empty()) {
    auto more = io::read_points(cfg.points);
    pts.insert(pts.end(), more.begin(), more.end());
  }
  if (cfg.samples > 0) {
    auto more = sample_points(coords, cfg.samples, cfg.seed, cfg.height);
    pts.insert(pts.end(), more.begin(), more.end());
  }
  return pts;
}

std::vector<RationalPoint> require_points(const RunConfig& cfg, std::size_t coords) {
  auto pts = gather_points(cfg, coords);
  if (pts.empty()) throw ParseError("no points given: use --point, --points or --samples");
  return pts;
}

PlaceSet parse_places(const std::string& text) {
  try {
    return PlaceSet::parse(text);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("--places: ") + e.what());
  }
}

PlaceSet places_or_infinity(const RunConfig& cfg) { return cfg.places.empty() ? PlaceSet{} : parse_places(cfg.places); }

RadiusGrid parse_grid(const RunConfig& cfg) {
  try {
    return RadiusGrid::parse(cfg.grid);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("--grid: ") + e.what());
  }
}

QuadratureOptions quadrature(const RunConfig& cfg) {
  QuadratureOptions opts;
  if (cfg.nodes < 8) throw ParseError("--nodes must be >= 8");
  opts.nodes = cfg.nodes;
  opts.max_nodes = std::max(opts.max_nodes, cfg.nodes);
  return opts;
}

PolynomialCurve single_curve(const RunConfig& cfg) {
  if (cfg.curve.size() != 1) throw ParseError("exactly one --curve is required");
  return io::read_curve(cfg.curve.front());
}

void check_dims(const HomogeneousMonomialIdeal& a, const std::vector<RationalPoint>& pts) {
  for (const auto& p : pts) {
    if (p.ambient_dim() != a.ambient_dim()) {
      throw ParseError("point " + p.to_string() + " does not lie on P^" + std::to_string(a.ambient_dim()));
    }
  }
}

void check_dims(const HomogeneousMonomialIdeal& a, const PolynomialCurve& f) {
  if (f.ambient_dim() != a.ambient_dim()) {
    throw ParseError("curve maps to P^" + std::to_string(f.ambient_dim()) + ", ideal lives on P^" +
                     std::to_string(a.ambient_dim()));
  }
}

bool is_homogeneous_file(const std::string& path) {
  const auto j = io::parse_json(io::read_file(path));
  return j.is_object() && j.contains("homogeneous") && j.at("homogeneous").is_boolean() &&
         j.at("homogeneous").get<bool>();
}

Json multiplier_command(const RunConfig& cfg, bool minus) {
  const Rational c = parse_param(cfg.c, "c");
  if (is_homogeneous_file(cfg.ideal)) {
    const auto a = io::read_projective_ideal(cfg.ideal);
    return io::to_json(minus ? projective_multiplier_ideal_minus(a, c) : projective_multiplier_ideal(a, c));
  }
  const auto a = io::read_ideal(cfg.ideal);
  return io::to_json(minus ? multiplier_ideal_minus(a, c) : multiplier_ideal(a, c));
}

Json lct_command(const RunConfig& cfg) {
  const auto a = io::read_ideal(cfg.ideal);
  const auto l = lct(a);
  Json j;
  j["lct"] = l ? to_string(*l) : "infinity";
  return j;
}

Json place_value_json(const PlaceValue& v) {
  Json j;
  j["place"] = v.place.to_string();
  if (!v.place.is_infinite()) j["mult"] = v.multiplicity;
  j["value"] = io::round12(v.value());
  return j;
}

Json weil_command(const RunConfig& cfg) {
  const auto a = io::read_projective_ideal(cfg.ideal);
  const auto pts = require_points(cfg, a.ambient_dim() + 1);
  check_dims(a, pts);
  Json rows = Json::array();
  for (const auto& p : pts) {
    std::vector<Place> places;
    if (cfg.places.empty()) {
      places.push_back(Place::infinity());
      for (auto q : prime_support(p)) places.push_back(Place::prime(q));
    } else {
      const auto s = parse_places(cfg.places);
      if (s.infinity) places.push_back(Place::infinity());
      for (auto q : s.primes) places.push_back(Place::prime(q));
    }
    Json values = Json::array();
    for (const auto& v : places) values.push_back(place_value_json(weil_local(a, p, v)));
    rows.push_back(Json{{"point", p.to_string()}, {"values", std::move(values)}});
  }
  Json j;
  j["ideal"] = io::to_json(a);
  j["rows"] = std::move(rows);
  return j;
}

Json pointwise_command(const RunConfig& cfg, const std::string& quantity,
                       const std::function<LogSum(const HomogeneousMonomialIdeal&, const RationalPoint&,
                                                  const PlaceSet&)>& fn,
                       bool uses_places) {
  const auto a = io::read_projective_ideal(cfg.ideal);
  const auto pts = require_points(cfg, a.ambient_dim() + 1);
  check_dims(a, pts);
  const auto s = places_or_infinity(cfg);
  if (uses_places && !s.infinity) throw ParseError("--places must contain inf");
  Json rows = Json::array();
  for (const auto& p : pts) {
    Json row;
    row["point"] = p.to_string();
    row[quantity] = io::to_json(fn(a, p, s));
    if (!uses_places) row["h"] = io::round12(weil_height(p));
    rows.push_back(std::move(row));
  }
  Json j;
  j["ideal"] = io::to_json(a);
  if (uses_places) j["places"] = s.to_string();
  j["rows"] = std::move(rows);
  return j;
}

void curve_command(const RunConfig& cfg, Output& output) {
  const auto a = io::read_projective_ideal(cfg.ideal);
  const auto f = single_curve(cfg);
  check_dims(a, f);
  const auto rows = tabulate(f, a, parse_grid(cfg), quadrature(cfg));
  Json j;
  j["curve"] = io::to_json(f);
  j["ideal"] = io::to_json(a);
  j["nodes"] = cfg.nodes;
  j["rows"] = io::to_json(rows);
  output.table(j, [&] { return io::to_csv(rows); });
}

void margins_command(const RunConfig& cfg, MarginKind kind, Output& output) {
  const auto a = io::read_projective_ideal(cfg.ideal);
  const Rational eps = parse_param(cfg.eps, "eps");
  MarginReport rep;
  if (kind == MarginKind::margins32 || kind == MarginKind::margins42) {
    const auto pts = require_points(cfg, a.ambient_dim() + 1);
    check_dims(a, pts);
    const auto s = places_or_infinity(cfg);
    rep = kind == MarginKind::margins32 ? margin_arithmetic(a, eps, s, pts, cfg.slack)
                                        : margin_truncated_arithmetic(a, eps, s, pts, cfg.slack);
  } else {
    const auto f = single_curve(cfg);
    check_dims(a, f);
    const auto grid = parse_grid(cfg);
    rep = kind == MarginKind::margins31 ? margin_nevanlinna(a, eps, f, grid, quadrature(cfg), cfg.slack)
                                        : margin_truncated_nevanlinna(a, eps, f, grid, quadrature(cfg), cfg.slack);
  }
  output.table(io::to_json(rep), [&] { return io::to_csv(rep); });
}

std::vector<std::int64_t> parse_divisor(const std::string& text) {
  if (text.empty()) throw ParseError("--divisor is required, e.g. 1,1,0");
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument("trailing characters");
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("bad divisor entry \"" + item + "\"");
    }
  }
  return out;
}

Json reduction_command(const RunConfig& cfg) {
  const auto d = parse_divisor(cfg.divisor);
  RunConfig local = cfg;
  if (local.point.empty() && local.points.empty() && local.samples == 0) local.samples = 100;
  const auto pts = gather_points(local, d.size());
  std::vector<PolynomialCurve> curves;
  for (const auto& path : cfg.curve) curves.push_back(io::read_curve(path));
  const auto check = reduction_check(d, pts, curves, parse_grid(cfg), quadrature(cfg));
  Json j;
  j["divisor"] = d;
  j["result"] = io::to_json(check);
  return j;
}

void blowup_command(const RunConfig& cfg, Output& output) {
  std::optional<Rational> eta;
  if (!cfg.eta.empty()) eta = parse_param(cfg.eta, "eta");
  std::vector<PolynomialCurve> curves;
  for (const auto& path : cfg.curve) curves.push_back(io::read_curve(path));
  const auto pts = gather_points(cfg, 3);
  if (curves.empty() && pts.empty()) curves = pinned_blowup_curves();
  BlowupReport rep = blowup_chain_check(cfg.m, eta, curves, parse_grid(cfg), cfg.constant, quadrature(cfg));
  if (!pts.empty()) {
    auto arith = blowup_chain_check(cfg.m, eta, pts, cfg.constant);
    rep.points = std::move(arith.points);
    rep.passed = rep.passed && arith.passed;
    rep.failures.insert(rep.failures.end(), arith.failures.begin(), arith.failures.end());
  }
  output.table(io::to_json(rep), [&] { return io::to_csv(rep); });
}

Json example_1_3_command(const RunConfig& cfg) {
  const auto sweep = sweep_left_limit_identity(cfg.max_mult, cfg.max_dim);
  Json j;
  j["max_mult"] = cfg.max_mult;
  j["max_dim"] = cfg.max_dim;
  j["checked"] = sweep.checked;
  j["failures"] = sweep.failures;
  j["result"] = sweep.failures.empty() ? "all passed" : "failed";
  return j;
}

void write_domain_error(std::ostream& err, const DomainError& e) {
  Json j;
  j["error"] = Json{{"kind", e.kind()}, {"message", e.what()}};
  err << j.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiplier ideals, Weil functions and Nevanlinna margins for monomial ideals", "mulideal"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto add_ideal = [&](CLI::App* s) { s->add_option("--ideal", cfg.ideal, "ideal JSON file")->required(); };
  const auto add_points = [&](CLI::App* s) {
    s->add_option("--point", cfg.point, "point x0,...,xn (repeatable)");
    s->add_option("--points", cfg.points, "file with one point per line");
    s->add_option("--samples", cfg.samples, "add this many random points");
    s->add_option("--seed", cfg.seed, "seed for --samples");
    s->add_option("--height", cfg.height, "coordinate bound for --samples")->check(CLI::PositiveNumber);
  };
  const auto add_places = [&](CLI::App* s) { s->add_option("--places", cfg.places, "places, e.g. inf,2,3"); };
  const auto add_curve = [&](CLI::App* s, bool many) {
    auto* o = s->add_option("--curve", cfg.curve, "curve JSON file");
    if (!many) o->expected(1);
  };
  const auto add_grid = [&](CLI::App* s) {
    s->add_option("--grid", cfg.grid, "radii: a,b,c or start:stop:step")->capture_default_str();
    s->add_option("--nodes", cfg.nodes, "initial quadrature nodes")->capture_default_str();
  };
  const auto add_format = [&](CLI::App* s) {
    s->add_option("--format", cfg.format, "json or csv")->capture_default_str()->check(CLI::IsMember({"json", "csv"}));
  };
  const auto add_out = [&](CLI::App* s) { s->add_option("--out", cfg.out, "write the report here instead of stdout"); };

  std::function<void(Output&)> action;
  const auto sub = [&](const char* name, const char* help, std::function<void(Output&)> fn) {
    auto* s = app.add_subcommand(name, help);
    s->callback([&, fn] { action = fn; });
    add_out(s);
    return s;
  };

  auto* mi = sub("mi", "multiplier ideal I(a^c)", [&](Output& o) { o.json(multiplier_command(cfg, false)); });
  add_ideal(mi);
  mi->add_option("--c", cfg.c, "exponent c > 0 (rational)")->required();
  auto* mim = sub("mi-minus", "left-limit ideal I^-(a^c)", [&](Output& o) { o.json(multiplier_command(cfg, true)); });
  add_ideal(mim);
  mim->add_option("--c", cfg.c, "exponent c > 0 (rational)")->required();

  auto* l = sub("lct", "log canonical threshold", [&](Output& o) { o.json(lct_command(cfg)); });
  add_ideal(l);

  auto* jmp = sub("jump", "jumping numbers in (0, cmax]", [&](Output& o) {
    o.json(io::to_json(jumping_numbers(io::read_ideal(cfg.ideal), parse_param(cfg.cmax, "cmax"))));
  });
  add_ideal(jmp);
  jmp->add_option("--cmax", cfg.cmax, "upper end")->capture_default_str();

  auto* ex = sub("check-example-1-3", "I^-(O(-D)) = O(-(D - D_red)) for all small SNC monomial divisors",
                 [&](Output& o) { o.json(example_1_3_command(cfg)); });
  ex->add_option("--max-mult", cfg.max_mult, "largest multiplicity")->capture_default_str();
  ex->add_option("--max-dim", cfg.max_dim, "largest dimension")->capture_default_str();

  auto* w = sub("weil", "local Weil functions", [&](Output& o) { o.json(weil_command(cfg)); });
  add_ideal(w);
  add_points(w);
  add_places(w);
  auto* pr = sub("prox", "proximity m_S(a, P)", [&](Output& o) {
    o.json(pointwise_command(cfg, "m", proximity, true));
  });
  add_ideal(pr);
  add_points(pr);
  add_places(pr);
  auto* ct = sub("count", "counting N_S(a, P)", [&](Output& o) {
    o.json(pointwise_command(cfg, "N", counting, true));
  });
  add_ideal(ct);
  add_points(ct);
  add_places(ct);
  auto* ct1 = sub("count1", "truncated counting N_S^(1)(a, P)", [&](Output& o) {
    o.json(pointwise_command(cfg, "N1", truncated_counting, true));
  });
  add_ideal(ct1);
  add_points(ct1);
  add_places(ct1);
  auto* ht = sub("height", "height h_a(P)", [&](Output& o) {
    o.json(pointwise_command(
        cfg, "h_a", [](const HomogeneousMonomialIdeal& a, const RationalPoint& p, const PlaceSet&) {
          return height_ideal(a, p);
        },
        false));
  });
  add_ideal(ht);
  add_points(ht);

  auto* cv = sub("curve", "T_f, m_f, N_f, N^(1)_f along a polynomial curve", [&](Output& o) { curve_command(cfg, o); });
  add_ideal(cv);
  add_curve(cv, false);
  add_grid(cv);
  add_format(cv);

  const std::pair<const char*, MarginKind> margin_kinds[] = {{"margins32", MarginKind::margins32},
                                                             {"margins42", MarginKind::margins42},
                                                             {"margins31", MarginKind::margins31},
                                                             {"margins41", MarginKind::margins41}};
  for (const auto& [name, kind] : margin_kinds) {
    const bool arithmetic = kind == MarginKind::margins32 || kind == MarginKind::margins42;
    const MarginKind k = kind;
    auto* s = sub(name, arithmetic ? "arithmetic margin table" : "Nevanlinna margin table",
                  [&, k](Output& o) { margins_command(cfg, k, o); });
    add_ideal(s);
    s->add_option("--eps", cfg.eps, "epsilon > 0 (rational)")->capture_default_str();
    s->add_option("--slack", cfg.slack, "flag rows with margin < -slack")->capture_default_str();
    add_format(s);
    if (arithmetic) {
      add_points(s);
      add_places(s);
    } else {
      add_curve(s, false);
      add_grid(s);
    }
  }

  auto* red = sub("check-reduction", "reduced coordinate divisors: ideal vs classical proximity",
                  [&](Output& o) { o.json(reduction_command(cfg)); });
  red->add_option("--divisor", cfg.divisor, "0/1 multiplicities, e.g. 1,1,0")->required();
  add_points(red);
  add_curve(red, true);
  add_grid(red);

  auto* bl = sub("check-blowup", "proof chains on the blow-up of P^2 at [1:0:0]", [&](Output& o) { blowup_command(cfg, o); });
  bl->add_option("--m", cfg.m, "a = (x, y)^m")->capture_default_str()->check(CLI::PositiveNumber);
  bl->add_option("--eta", cfg.eta, "eta in (0, 1); default 1/(2m)");
  bl->add_option("--constant", cfg.constant, "the constant C")->capture_default_str();
  add_curve(bl, true);
  add_points(bl);
  add_grid(bl);
  add_format(bl);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? 0 : 1;
  }

  try {
    Output output(cfg, out);
    action(output);
    return 0;
  } catch (const DomainError& e) {
    write_domain_error(err, e);
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace mulideal::cli
