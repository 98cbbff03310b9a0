#include "mulideal/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mulideal/errors.hpp"

namespace mulideal::io {
namespace {

void expect_keys(const Json& j, std::initializer_list<std::string_view> allowed, std::string_view what) {
  if (!j.is_object()) throw ParseError(std::string(what) + " must be a JSON object");
  for (const auto& item : j.items()) {
    bool ok = false;
    for (auto k : allowed) ok = ok || item.key() == k;
    if (!ok) throw ParseError("unknown field \"" + item.key() + "\" in " + std::string(what));
  }
}

std::int64_t json_int(const Json& v, std::string_view what) {
  if (!v.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return v.get<std::int64_t>();
}

std::vector<ExponentVector> read_generators(const Json& j, std::size_t& dim) {
  expect_keys(j, {"dim", "generators", "homogeneous"}, "ideal");
  if (!j.contains("dim") || !j.contains("generators")) throw ParseError("ideal needs \"dim\" and \"generators\"");
  const auto d = json_int(j.at("dim"), "dim");
  if (d < 1) throw ParseError("dim must be >= 1");
  dim = static_cast<std::size_t>(d);
  const auto& gens = j.at("generators");
  if (!gens.is_array()) throw ParseError("generators must be an array");
  std::vector<ExponentVector> out;
  for (const auto& g : gens) {
    if (!g.is_array() || g.size() != dim) throw ParseError("every generator must be an array of length dim");
    ExponentVector v;
    for (const auto& e : g) {
      const auto x = json_int(e, "exponent");
      if (x < 0) throw ParseError("exponents must be nonnegative");
      v.push_back(x);
    }
    out.push_back(std::move(v));
  }
  if (out.empty()) throw DomainError("zero_ideal", "the zero ideal has no generators");
  return out;
}

bool is_homogeneous_json(const Json& j) {
  if (!j.contains("homogeneous")) return false;
  if (!j.at("homogeneous").is_boolean()) throw ParseError("homogeneous must be a boolean");
  return j.at("homogeneous").get<bool>();
}

Rational json_rational(const Json& v) {
  if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<std::int64_t>())));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("coefficient parts must be integers or rational strings");
}

GaussianRational json_coefficient(const Json& v) {
  if (v.is_array()) {
    if (v.size() != 2) throw ParseError("complex coefficient must be a [re, im] pair");
    return GaussianRational(json_rational(v[0]), json_rational(v[1]));
  }
  if (v.is_string()) {
    try {
      return parse_gaussian(v.get<std::string>());
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(e.what());
    }
  }
  return GaussianRational(json_rational(v));
}

Json coefficient_json(const GaussianRational& c) {
  if (c.im == 0) return to_string(c.re);
  return Json::array({to_string(c.re), to_string(c.im)});
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

double round12(double x) {
  if (x == 0.0) return 0.0;  // folds -0.0
  return std::strtod(format_double(x).c_str(), nullptr);
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json to_json(const MonomialIdeal& a) {
  Json j;
  j["dim"] = a.dim();
  j["generators"] = a.generators();
  return j;
}

Json to_json(const HomogeneousMonomialIdeal& a) {
  Json j;
  j["dim"] = a.ambient_dim() + 1;
  j["homogeneous"] = true;
  j["generators"] = a.generators();
  return j;
}

MonomialIdeal ideal_from_json(const Json& j) {
  std::size_t dim = 0;
  auto gens = read_generators(j, dim);
  if (is_homogeneous_json(j)) throw ParseError("expected an affine ideal, got a homogeneous one");
  return MonomialIdeal::minimalize(std::move(gens));
}

HomogeneousMonomialIdeal projective_ideal_from_json(const Json& j) {
  std::size_t dim = 0;
  auto gens = read_generators(j, dim);
  if (!is_homogeneous_json(j)) return homogenize(MonomialIdeal::minimalize(std::move(gens)));
  if (dim < 2) throw ParseError("a homogeneous ideal needs dim = n + 1 >= 2");
  try {
    return HomogeneousMonomialIdeal::from_generators(std::move(gens));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

MonomialIdeal read_ideal(const std::string& path) { return ideal_from_json(parse_json(read_file(path))); }

HomogeneousMonomialIdeal read_projective_ideal(const std::string& path) {
  return projective_ideal_from_json(parse_json(read_file(path)));
}

Json to_json(const PolynomialCurve& f) {
  Json comps = Json::array();
  for (const auto& p : f.components()) {
    Json c = Json::array();
    for (const auto& x : p.coeffs()) c.push_back(coefficient_json(x));
    comps.push_back(std::move(c));
  }
  Json j;
  j["components"] = std::move(comps);
  return j;
}

PolynomialCurve curve_from_json(const Json& j) {
  expect_keys(j, {"components"}, "curve");
  if (!j.contains("components") || !j.at("components").is_array()) throw ParseError("curve needs a \"components\" array");
  std::vector<Polynomial> comps;
  for (const auto& c : j.at("components")) {
    if (!c.is_array()) throw ParseError("each component must be a coefficient array");
    std::vector<GaussianRational> coeffs;
    for (const auto& x : c) coeffs.push_back(json_coefficient(x));
    comps.emplace_back(std::move(coeffs));
  }
  if (comps.size() < 2) throw ParseError("a curve needs at least 2 components");
  return PolynomialCurve(std::move(comps));
}

PolynomialCurve read_curve(const std::string& path) { return curve_from_json(parse_json(read_file(path))); }

std::vector<RationalPoint> parse_points(std::string_view text) {
  std::vector<RationalPoint> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    start = end + 1;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back(RationalPoint::parse(line));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError("bad point \"" + line + "\": " + e.what());
    }
  }
  return out;
}

std::vector<RationalPoint> read_points(const std::string& path) { return parse_points(read_file(path)); }

Json to_json(const LogSum& s) {
  Json finite = Json::array();
  for (const auto& [p, mult] : s.finite) finite.push_back(Json{{"p", p}, {"mult", mult}});
  Json j;
  j["archimedean"] = round12(s.archimedean);
  j["finite"] = std::move(finite);
  j["value"] = round12(s.value());
  return j;
}

Json to_json(const JumpingSpectrum& s) {
  Json thresholds = Json::array();
  for (const auto& t : s.thresholds) thresholds.push_back(to_string(t));
  Json ideals = Json::array();
  for (const auto& i : s.ideals) ideals.push_back(to_json(i));
  Json j;
  j["jumping_numbers"] = std::move(thresholds);
  j["ideals"] = std::move(ideals);
  return j;
}

Json to_json(const MarginReport& r) {
  Json j;
  j["kind"] = to_string(r.kind);
  j["context"] = r.places ? "arithmetic" : "nevanlinna";
  j["ambient_dim"] = r.ambient_dim;
  j["ideal"] = to_json(r.ideal);
  j["left_limit"] = to_json(r.left_limit);
  j["eps"] = to_string(r.eps);
  j["slack"] = round12(r.slack);
  if (r.places) j["places"] = r.places->to_string();
  if (r.kind == MarginKind::margins31 || r.kind == MarginKind::margins41) j["ideal_characteristic"] = "T_a := m_f(a) + N_f(a)";
  j["note"] = "flagged rows have a negative margin beyond the slack; they are not counterexamples";
  j["columns"] = r.columns;
  j["signs"] = r.signs;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json jr;
    jr["label"] = row.label;
    if (row.error) {
      jr["error"] = *row.error;
    } else {
      Json terms;
      for (std::size_t k = 0; k < row.terms.size(); ++k) terms[r.columns[k]] = to_json(row.terms[k]);
      jr["terms"] = std::move(terms);
      jr["margin"] = to_json(row.margin);
    }
    jr["flagged"] = row.flagged;
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  return j;
}

std::string to_csv(const MarginReport& r) {
  std::string out = "label";
  for (const auto& c : r.columns) out += "," + c;
  out += ",margin,flagged,error\n";
  for (const auto& row : r.rows) {
    out += csv_escape(row.label);
    for (std::size_t k = 0; k < r.columns.size(); ++k) {
      out += ",";
      if (!row.error) out += format_double(row.terms[k].value());
    }
    out += ",";
    if (!row.error) out += format_double(row.margin.value());
    out += row.flagged ? ",true," : ",false,";
    if (row.error) out += *row.error;
    out += "\n";
  }
  return out;
}

Json to_json(const ReductionCheck& r) {
  Json j;
  j["passed"] = r.passed;
  j["points_checked"] = r.points_checked;
  j["points_skipped"] = r.points_skipped;
  j["radii_checked"] = r.radii_checked;
  j["max_analytic_deviation"] = round12(r.max_analytic_deviation);
  j["failures"] = r.failures;
  return j;
}

Json to_json(const BlowupReport& r) {
  Json j;
  j["m"] = r.m;
  j["eta"] = to_string(r.eta);
  j["chain_coefficient"] = r.chain_coefficient;
  j["ideal"] = to_json(r.ideal);
  j["chain_ideal"] = to_json(r.chain_ideal);
  j["constant"] = round12(r.constant);
  Json curves = Json::array();
  for (const auto& t : r.curves) {
    Json rows = Json::array();
    for (const auto& row : t.rows) {
      Json jr;
      jr["r"] = round12(row.r);
      jr["m_f_a"] = round12(row.proximity);
      jr["m_g_E"] = round12(row.exceptional);
      jr["functoriality_gap"] = round12(row.functoriality_gap);
      jr["chain_lhs"] = round12(row.chain_lhs);
      jr["chain_rhs"] = round12(row.chain_rhs);
      jr["canonical_basis"] = round12(row.canonical_basis);
      jr["canonical_pullback"] = round12(row.canonical_pullback);
      jr["canonical_gap"] = round12(row.canonical_gap);
      jr["N1_f_a"] = round12(row.truncated_curve);
      jr["N1_g_E"] = round12(row.truncated_lift);
      jr["passed"] = row.passed;
      rows.push_back(std::move(jr));
    }
    curves.push_back(Json{{"label", t.label}, {"rows", std::move(rows)}});
  }
  j["curves"] = std::move(curves);
  Json points = Json::array();
  for (const auto& p : r.points) {
    Json jp;
    jp["label"] = p.label;
    jp["functoriality_gap"] = round12(p.functoriality_gap);
    jp["finite_exact"] = p.finite_exact;
    jp["chain_slack"] = round12(p.chain_slack);
    jp["canonical_gap"] = round12(p.canonical_gap);
    jp["passed"] = p.passed;
    points.push_back(std::move(jp));
  }
  j["points"] = std::move(points);
  j["passed"] = r.passed;
  j["failures"] = r.failures;
  return j;
}

std::string to_csv(const BlowupReport& r) {
  std::string out;
  if (!r.curves.empty()) {
    out += "curve,r,m_f_a,m_g_E,functoriality_gap,chain_lhs,chain_rhs,canonical_basis,canonical_pullback,"
           "canonical_gap,N1_f_a,N1_g_E,passed\n";
    for (const auto& t : r.curves) {
      for (const auto& row : t.rows) {
        out += csv_escape(t.label);
        for (double v : {row.r, row.proximity, row.exceptional, row.functoriality_gap, row.chain_lhs, row.chain_rhs,
                         row.canonical_basis, row.canonical_pullback, row.canonical_gap, row.truncated_curve,
                         row.truncated_lift}) {
          out += "," + format_double(v);
        }
        out += row.passed ? ",true\n" : ",false\n";
      }
    }
  }
  if (!r.points.empty()) {
    out += "point,functoriality_gap,finite_exact,chain_slack,canonical_gap,passed\n";
    for (const auto& p : r.points) {
      out += csv_escape(p.label) + "," + format_double(p.functoriality_gap) + (p.finite_exact ? ",true," : ",false,") +
             format_double(p.chain_slack) + "," + format_double(p.canonical_gap) + (p.passed ? ",true\n" : ",false\n");
    }
  }
  return out;
}

Json to_json(const std::vector<CurveFunctionRow>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json j;
    j["r"] = round12(row.r);
    j["T_f"] = round12(row.characteristic);
    j["m_f"] = round12(row.proximity);
    j["N_f"] = round12(row.counting);
    j["N1_f"] = round12(row.truncated);
    j["T_a_f"] = round12(row.ideal_characteristic());
    out.push_back(std::move(j));
  }
  return out;
}

std::string to_csv(const std::vector<CurveFunctionRow>& rows) {
  std::string out = "r,T_f,m_f,N_f,N1_f,T_a_f\n";
  for (const auto& row : rows) {
    out += format_double(row.r) + "," + format_double(row.characteristic) + "," + format_double(row.proximity) + "," +
           format_double(row.counting) + "," + format_double(row.truncated) + "," +
           format_double(row.ideal_characteristic()) + "\n";
  }
  return out;
}

}  // namespace mulideal::io
