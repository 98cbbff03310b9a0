#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mulideal/arithmetic.hpp"
#include "mulideal/blowup.hpp"
#include "mulideal/conjecture.hpp"
#include "mulideal/monomial_ideal.hpp"
#include "mulideal/multiplier.hpp"
#include "mulideal/nevanlinna.hpp"

// File formats. Everything malformed raises ParseError; unknown JSON keys are
// rejected. Emitted JSON keeps insertion order so column order is fixed.
//
//   ideal:  {"dim": n, "generators": [[e_1, ..., e_n], ...], "homogeneous": false}
//           homogeneous ideals list vectors of length dim = n + 1 for P^n;
//           affine ideals used on P^n are homogenized with x_0 first.
//   curve:  {"components": [[c_0, c_1, ...], ...]}, ascending coefficients,
//           each an integer, a "p/q" / "a+bi" string or a [re, im] pair.
//   points: one point per line, "x_0,x_1,...,x_n"; blank lines and '#' skipped.
namespace mulideal::io {

using Json = nlohmann::ordered_json;

// Rounds to 12 significant digits so float fields print identically.
double round12(double x);

std::string read_file(const std::string& path);

Json to_json(const MonomialIdeal& a);
Json to_json(const HomogeneousMonomialIdeal& a);
MonomialIdeal ideal_from_json(const Json& j);
HomogeneousMonomialIdeal projective_ideal_from_json(const Json& j);
MonomialIdeal read_ideal(const std::string& path);
HomogeneousMonomialIdeal read_projective_ideal(const std::string& path);

Json to_json(const PolynomialCurve& f);
PolynomialCurve curve_from_json(const Json& j);
PolynomialCurve read_curve(const std::string& path);

std::vector<RationalPoint> parse_points(std::string_view text);
std::vector<RationalPoint> read_points(const std::string& path);

Json parse_json(std::string_view text);

Json to_json(const LogSum& s);
Json to_json(const JumpingSpectrum& s);
Json to_json(const MarginReport& r);
std::string to_csv(const MarginReport& r);
Json to_json(const ReductionCheck& r);
Json to_json(const BlowupReport& r);
std::string to_csv(const BlowupReport& r);
Json to_json(const std::vector<CurveFunctionRow>& rows);
std::string to_csv(const std::vector<CurveFunctionRow>& rows);

// "%.12g"
std::string format_double(double x);

}  // namespace mulideal::io
