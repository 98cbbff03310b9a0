#include "mulideal/arithmetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "mulideal/errors.hpp"
#include "mulideal/factor.hpp"

namespace mulideal {
namespace {

std::int64_t total_degree(const ExponentVector& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

// All exponent vectors in `vars` variables of total degree k.
void monomials_of_degree(std::size_t vars, std::int64_t k, ExponentVector& cur, std::size_t pos,
                         std::vector<ExponentVector>& out) {
  if (pos + 1 == vars) {
    cur[pos] = k;
    out.push_back(cur);
    return;
  }
  for (std::int64_t e = 0; e <= k; ++e) {
    cur[pos] = e;
    monomials_of_degree(vars, k - e, cur, pos + 1, out);
  }
}

bool vanishes_at(const ExponentVector& g, const std::vector<std::int64_t>& x) {
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (g[j] > 0 && x[j] == 0) return true;
  }
  return false;
}

void check_dims(const HomogeneousMonomialIdeal& a, const RationalPoint& p) {
  if (a.ambient_dim() != p.ambient_dim()) {
    throw std::invalid_argument("ideal lives on P^" + std::to_string(a.ambient_dim()) + " but the point on P^" +
                                std::to_string(p.ambient_dim()));
  }
}

[[noreturn]] void on_zero_set(const RationalPoint& p) {
  throw DomainError("point_on_zero_set", "point (" + p.to_string() + ") lies on the zero scheme of the ideal");
}

std::optional<std::int64_t> local_multiplicity(const HomogeneousMonomialIdeal& a, const RationalPoint& p,
                                               std::uint64_t prime) {
  const auto& x = p.coords();
  std::vector<std::int64_t> ord(x.size(), 0);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] != 0) ord[j] = valuation(x[j], prime);
  }
  std::optional<std::int64_t> best;
  for (const auto& g : a.generators()) {
    if (vanishes_at(g, x)) continue;
    std::int64_t s = 0;
    for (std::size_t j = 0; j < g.size(); ++j) s += g[j] * ord[j];
    if (!best || s < *best) best = s;
  }
  return best;
}

double archimedean_value(const HomogeneousMonomialIdeal& a, const RationalPoint& p) {
  const auto& x = p.coords();
  std::vector<double> logs(x.size(), 0.0);
  double top = -INFINITY;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] == 0) continue;
    logs[j] = std::log(std::fabs(static_cast<double>(x[j])));
    top = std::max(top, logs[j]);
  }
  std::optional<double> best;
  for (const auto& g : a.generators()) {
    if (vanishes_at(g, x)) continue;
    double s = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g[j] != 0) s += static_cast<double>(g[j]) * (top - logs[j]);
    }
    if (!best || s < *best) best = s;
  }
  if (!best) on_zero_set(p);
  return *best;
}

}  // namespace

Place Place::prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not a prime");
  return Place(p);
}

std::string Place::to_string() const { return is_infinite() ? "inf" : std::to_string(p_); }

PlaceSet PlaceSet::parse(std::string_view text) {
  PlaceSet s;
  s.infinity = false;
  for (const auto& tok : split(text, ',')) {
    if (tok.empty()) continue;
    if (tok == "inf" || tok == "infinity") {
      s.infinity = true;
      continue;
    }
    std::size_t used = 0;
    unsigned long long p = 0;
    try {
      p = std::stoull(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || !is_prime(p)) throw std::invalid_argument("not a place: '" + tok + "'");
    s.primes.insert(p);
  }
  return s;
}

std::string PlaceSet::to_string() const {
  std::string out = infinity ? "inf" : "";
  for (auto p : primes) {
    if (!out.empty()) out += ",";
    out += std::to_string(p);
  }
  return out;
}

RationalPoint::RationalPoint(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) throw std::invalid_argument("a projective point needs at least two coordinates");
  std::int64_t g = 0;
  for (auto c : coords_) g = std::gcd(g, c);
  if (g == 0) throw std::invalid_argument("all coordinates of a projective point are zero");
  const auto first = std::find_if(coords_.begin(), coords_.end(), [](std::int64_t c) { return c != 0; });
  if (*first < 0) g = -g;
  for (auto& c : coords_) c /= g;
}

RationalPoint RationalPoint::parse(std::string_view text) {
  std::vector<std::int64_t> coords;
  for (const auto& tok : split(text, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size()) throw std::invalid_argument("bad point coordinate: '" + tok + "'");
    coords.push_back(v);
  }
  return RationalPoint(std::move(coords));
}

std::string RationalPoint::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  return os.str();
}

HomogeneousMonomialIdeal HomogeneousMonomialIdeal::from_generators(std::vector<ExponentVector> generators) {
  auto minimal = MonomialIdeal::minimalize(std::move(generators));
  if (minimal.dim() < 2) throw std::invalid_argument("a homogeneous ideal needs at least two variables");
  const auto& gens = minimal.generators();
  const std::int64_t d = total_degree(gens.front());
  for (const auto& g : gens) {
    if (total_degree(g) != d) throw std::invalid_argument("homogeneous generators must share one total degree");
  }
  return HomogeneousMonomialIdeal(d, gens);
}

HomogeneousMonomialIdeal HomogeneousMonomialIdeal::unit(std::size_t ambient_dim) {
  return HomogeneousMonomialIdeal(0, {ExponentVector(ambient_dim + 1, 0)});
}

HomogeneousMonomialIdeal HomogeneousMonomialIdeal::raise_degree(std::int64_t k) const {
  if (k < 0) throw std::invalid_argument("cannot lower the degree of a homogeneous ideal");
  if (k == 0) return *this;
  const std::size_t vars = ambient_dim() + 1;
  std::vector<ExponentVector> mons;
  ExponentVector cur(vars, 0);
  monomials_of_degree(vars, k, cur, 0, mons);
  std::vector<ExponentVector> gens;
  for (const auto& g : generators_) {
    for (const auto& m : mons) {
      ExponentVector s(vars);
      for (std::size_t j = 0; j < vars; ++j) s[j] = g[j] + m[j];
      gens.push_back(std::move(s));
    }
  }
  return from_generators(std::move(gens));
}

HomogeneousMonomialIdeal HomogeneousMonomialIdeal::operator+(const HomogeneousMonomialIdeal& other) const {
  if (other.ambient_dim() != ambient_dim()) throw std::invalid_argument("ideals live on different spaces");
  const std::int64_t d = std::max(degree_, other.degree_);
  auto gens = raise_degree(d - degree_).generators_;
  const auto& rest = other.raise_degree(d - other.degree_).generators_;
  gens.insert(gens.end(), rest.begin(), rest.end());
  return from_generators(std::move(gens));
}

bool HomogeneousMonomialIdeal::contains(const HomogeneousMonomialIdeal& other) const {
  return std::all_of(other.generators_.begin(), other.generators_.end(), [&](const ExponentVector& g) {
    return std::any_of(generators_.begin(), generators_.end(), [&](const ExponentVector& h) { return divides(h, g); });
  });
}

HomogeneousMonomialIdeal homogenize(const MonomialIdeal& a) {
  std::int64_t d = 0;
  for (const auto& g : a.generators()) d = std::max(d, total_degree(g));
  return homogenize(a, d, 0);
}

HomogeneousMonomialIdeal homogenize(const MonomialIdeal& a, std::int64_t degree, std::size_t chart) {
  if (chart > a.dim()) throw std::invalid_argument("chart index out of range");
  std::vector<ExponentVector> gens;
  for (const auto& g : a.generators()) {
    const std::int64_t t = total_degree(g);
    if (t > degree) throw std::invalid_argument("homogenizing degree below a generator's degree");
    ExponentVector h(g.begin(), g.end());
    h.insert(h.begin() + static_cast<std::ptrdiff_t>(chart), degree - t);
    gens.push_back(std::move(h));
  }
  if (degree == 0) return HomogeneousMonomialIdeal::unit(a.dim());
  return HomogeneousMonomialIdeal::from_generators(std::move(gens));
}

MonomialIdeal dehomogenize(const HomogeneousMonomialIdeal& a, std::size_t chart) {
  if (chart > a.ambient_dim()) throw std::invalid_argument("chart index out of range");
  std::vector<ExponentVector> gens;
  for (const auto& g : a.generators()) {
    ExponentVector v(g.begin(), g.end());
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(chart));
    gens.push_back(std::move(v));
  }
  return MonomialIdeal::minimalize(std::move(gens));
}

double LogSum::finite_value() const {
  double s = 0.0;
  for (const auto& [p, m] : finite) s += static_cast<double>(m) * std::log(static_cast<double>(p));
  return s;
}

double LogSum::value() const { return archimedean + finite_value(); }

void LogSum::add_finite(std::uint64_t p, std::int64_t mult) {
  if (mult == 0) return;
  auto& slot = finite[p];
  slot += mult;
  if (slot == 0) finite.erase(p);
}

LogSum& LogSum::operator+=(const LogSum& o) {
  archimedean += o.archimedean;
  for (const auto& [p, m] : o.finite) add_finite(p, m);
  return *this;
}

LogSum& LogSum::operator-=(const LogSum& o) {
  archimedean -= o.archimedean;
  for (const auto& [p, m] : o.finite) add_finite(p, -m);
  return *this;
}

LogSum LogSum::scaled(std::int64_t k) const {
  LogSum out;
  out.archimedean = archimedean * static_cast<double>(k);
  for (const auto& [p, m] : finite) out.add_finite(p, m * k);
  return out;
}

double PlaceValue::value() const {
  return place.is_infinite() ? archimedean
                             : static_cast<double>(multiplicity) * std::log(static_cast<double>(place.prime()));
}

PlaceValue weil_local(const HomogeneousMonomialIdeal& a, const RationalPoint& p, const Place& v) {
  check_dims(a, p);
  PlaceValue out;
  out.place = v;
  if (v.is_infinite()) {
    out.archimedean = archimedean_value(a, p);
  } else {
    const auto m = local_multiplicity(a, p, v.prime());
    if (!m) on_zero_set(p);
    out.multiplicity = *m;
  }
  return out;
}

std::vector<std::uint64_t> prime_support(const RationalPoint& p) {
  std::set<std::uint64_t> primes;
  for (auto c : p.coords()) {
    if (c == 0) continue;
    const std::uint64_t u = c < 0 ? static_cast<std::uint64_t>(-(c + 1)) + 1 : static_cast<std::uint64_t>(c);
    for (const auto& [q, e] : factorize(u)) primes.insert(q);
  }
  return {primes.begin(), primes.end()};
}

LogSum proximity(const HomogeneousMonomialIdeal& a, const RationalPoint& p, const PlaceSet& s) {
  if (!s.infinity) throw std::invalid_argument("the place set S must contain the archimedean place");
  check_dims(a, p);
  LogSum out;
  out.archimedean = archimedean_value(a, p);
  for (auto q : s.primes) {
    const auto m = local_multiplicity(a, p, q);
    if (!m) on_zero_set(p);
    out.add_finite(q, *m);
  }
  return out;
}

LogSum counting(const HomogeneousMonomialIdeal& a, const RationalPoint& p, const PlaceSet& s) {
  if (!s.infinity) throw std::invalid_argument("the place set S must contain the archimedean place");
  check_dims(a, p);
  archimedean_value(a, p);  // validates P off the zero scheme
  LogSum out;
  for (auto q : prime_support(p)) {
    if (s.primes.count(q)) continue;
    out.add_finite(q, *local_multiplicity(a, p, q));
  }
  return out;
}

LogSum truncated_counting(const HomogeneousMonomialIdeal& a, const RationalPoint& p, const PlaceSet& s) {
  LogSum out;
  for (const auto& [q, m] : counting(a, p, s).finite) {
    if (m > 0) out.add_finite(q, 1);
  }
  return out;
}

LogSum height_ideal(const HomogeneousMonomialIdeal& a, const RationalPoint& p) {
  check_dims(a, p);
  LogSum out;
  out.archimedean = archimedean_value(a, p);
  for (auto q : prime_support(p)) out.add_finite(q, *local_multiplicity(a, p, q));
  return out;
}

double weil_height(const RationalPoint& p) {
  std::int64_t top = 0;
  for (auto c : p.coords()) top = std::max(top, c < 0 ? -c : c);
  return std::log(static_cast<double>(top));
}

double height_class(std::int64_t e, const RationalPoint& p) { return static_cast<double>(e) * weil_height(p); }

}  // namespace mulideal
