#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mulideal/monomial_ideal.hpp"

namespace mulideal {

// A place of Q: a prime p or the archimedean place.
class Place {
 public:
  static Place infinity() { return Place(0); }
  // Throws std::invalid_argument unless p is prime.
  static Place prime(std::uint64_t p);

  bool is_infinite() const noexcept { return p_ == 0; }
  std::uint64_t prime() const noexcept { return p_; }
  std::string to_string() const;

  friend auto operator<=>(const Place&, const Place&) = default;

 private:
  explicit Place(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

// Finite set S of places; admissible sets contain the archimedean place.
struct PlaceSet {
  bool infinity = true;
  std::set<std::uint64_t> primes;

  // "inf,3,5" style lists.
  static PlaceSet parse(std::string_view text);
  bool contains(const Place& v) const { return v.is_infinite() ? infinity : primes.count(v.prime()) > 0; }
  std::string to_string() const;
};

// Point of P^n(Q) with coprime integer coordinates, first nonzero entry positive.
class RationalPoint {
 public:
  // Normalizes by the gcd and the sign. Throws std::invalid_argument if all
  // coordinates vanish or fewer than two are given.
  explicit RationalPoint(std::vector<std::int64_t> coords);
  static RationalPoint parse(std::string_view text);

  const std::vector<std::int64_t>& coords() const noexcept { return coords_; }
  std::size_t ambient_dim() const noexcept { return coords_.size() - 1; }
  std::string to_string() const;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

// Monomial ideal on P^n: generators in n+1 variables x_0..x_n, all of the same
// total degree.
class HomogeneousMonomialIdeal {
 public:
  // Keeps the divisibility-minimal generators. Throws DomainError("zero_ideal")
  // on empty input and std::invalid_argument on unequal degrees.
  static HomogeneousMonomialIdeal from_generators(std::vector<ExponentVector> generators);
  static HomogeneousMonomialIdeal unit(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return generators_.front().size() - 1; }
  std::int64_t degree() const noexcept { return degree_; }
  const std::vector<ExponentVector>& generators() const noexcept { return generators_; }
  bool is_unit() const noexcept { return degree_ == 0; }

  // Multiplies by (x_0, ..., x_n)^k; this leaves the ideal sheaf and the Weil
  // function unchanged.
  HomogeneousMonomialIdeal raise_degree(std::int64_t k) const;

  // Union of generators after raising both sides to the larger degree.
  HomogeneousMonomialIdeal operator+(const HomogeneousMonomialIdeal& other) const;

  // Every generator of `other` is divisible by one of ours (other is a subset of this).
  bool contains(const HomogeneousMonomialIdeal& other) const;

  friend bool operator==(const HomogeneousMonomialIdeal&, const HomogeneousMonomialIdeal&) = default;

 private:
  HomogeneousMonomialIdeal(std::int64_t degree, std::vector<ExponentVector> generators)
      : degree_(degree), generators_(std::move(generators)) {}

  std::int64_t degree_ = 0;
  std::vector<ExponentVector> generators_;
};

// x^v -> x_0^{d-|v|} x^v with d the largest total degree among the generators.
HomogeneousMonomialIdeal homogenize(const MonomialIdeal& a);
// Same with a prescribed degree d >= every generator's total degree.
HomogeneousMonomialIdeal homogenize(const MonomialIdeal& a, std::int64_t degree, std::size_t chart = 0);
// Sets x_chart = 1.
MonomialIdeal dehomogenize(const HomogeneousMonomialIdeal& a, std::size_t chart = 0);

// A sum of local terms: an archimedean float plus sum_p mult_p * log p kept
// exactly as integer multiplicities.
struct LogSum {
  double archimedean = 0.0;
  std::map<std::uint64_t, std::int64_t> finite;

  double value() const;
  double finite_value() const;
  void add_finite(std::uint64_t p, std::int64_t mult);

  LogSum& operator+=(const LogSum& o);
  LogSum& operator-=(const LogSum& o);
  friend LogSum operator+(LogSum a, const LogSum& b) { return a += b; }
  friend LogSum operator-(LogSum a, const LogSum& b) { return a -= b; }
  LogSum scaled(std::int64_t k) const;
};

// lambda_a(P, v). At a prime: multiplicity * log p exactly. At infinity: a float.
struct PlaceValue {
  Place place = Place::infinity();
  std::int64_t multiplicity = 0;
  double archimedean = 0.0;

  double value() const;
};

// Generator-minimum Weil function: at p, min_g ord_p(g(P)) log p; at infinity,
// min_g log(max_j |x_j|^d / |g(P)|), over generators g not vanishing at P.
// Throws DomainError("point_on_zero_set") when every generator vanishes at P.
PlaceValue weil_local(const HomogeneousMonomialIdeal& a, const RationalPoint& p, const Place& v);

// Primes dividing some nonzero coordinate: the only places where a Weil
// function of a monomial ideal can be positive.
std::vector<std::uint64_t> prime_support(const RationalPoint& p);

// Sum over v in S. S must contain the archimedean place.
LogSum proximity(const HomogeneousMonomialIdeal& a, const RationalPoint& p, const PlaceSet& s);
// Sum over primes outside S.
LogSum counting(const HomogeneousMonomialIdeal& a, const RationalPoint& p, const PlaceSet& s);
// log p for each prime outside S with a positive local value.
LogSum truncated_counting(const HomogeneousMonomialIdeal& a, const RationalPoint& p, const PlaceSet& s);
// Sum over all places.
LogSum height_ideal(const HomogeneousMonomialIdeal& a, const RationalPoint& p);

// log max_j |x_j| for coprime coordinates.
double weil_height(const RationalPoint& p);
// Height for O(e): e * weil_height(P). The canonical class of P^n is e = -(n+1).
double height_class(std::int64_t e, const RationalPoint& p);

}  // namespace mulideal
