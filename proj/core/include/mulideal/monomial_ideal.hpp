#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mulideal {

// Exponents of a monomial x_1^{v_1} ... x_n^{v_n}.
using ExponentVector = std::vector<std::int64_t>;

bool divides(std::span<const std::int64_t> lhs, std::span<const std::int64_t> rhs);

// A nonzero monomial ideal in n >= 1 variables, stored by its minimal
// generators in lexicographic order. The zero vector as the sole generator is
// the unit ideal.
class MonomialIdeal {
 public:
  // Reduces `generators` to the antichain of divisibility-minimal elements.
  // Throws DomainError("zero_ideal") on empty input and std::invalid_argument
  // on mixed dimensions or negative exponents.
  static MonomialIdeal minimalize(std::vector<ExponentVector> generators);
  static MonomialIdeal unit(std::size_t dim);
  static MonomialIdeal principal(ExponentVector exponents);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<ExponentVector>& generators() const noexcept { return generators_; }
  bool is_unit() const noexcept;

  // x^v belongs to the ideal.
  bool contains(std::span<const std::int64_t> v) const;
  // `other` is a subset of *this (every generator of other is divisible by one of ours).
  bool contains(const MonomialIdeal& other) const;

  // Largest i-th exponent over the generators.
  ExponentVector max_exponents() const;

  MonomialIdeal operator+(const MonomialIdeal& other) const;
  MonomialIdeal operator*(const MonomialIdeal& other) const;
  MonomialIdeal power(unsigned k) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  MonomialIdeal(std::size_t dim, std::vector<ExponentVector> generators)
      : dim_(dim), generators_(std::move(generators)) {}

  std::size_t dim_ = 0;
  std::vector<ExponentVector> generators_;
};

}  // namespace mulideal
