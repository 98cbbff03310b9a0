#include "mulideal/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "mulideal/errors.hpp"

namespace mulideal {

bool divides(std::span<const std::int64_t> lhs, std::span<const std::int64_t> rhs) {
  if (lhs.size() != rhs.size()) throw std::invalid_argument("exponent dimension mismatch");
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] > rhs[i]) return false;
  }
  return true;
}

MonomialIdeal MonomialIdeal::minimalize(std::vector<ExponentVector> generators) {
  if (generators.empty()) {
    throw DomainError("zero_ideal", "an ideal needs at least one generator (the zero ideal is excluded)");
  }
  const std::size_t n = generators.front().size();
  if (n == 0) throw std::invalid_argument("monomial ideal needs dimension >= 1");
  for (const auto& g : generators) {
    if (g.size() != n) throw std::invalid_argument("generators have mixed dimensions");
    if (std::any_of(g.begin(), g.end(), [](std::int64_t e) { return e < 0; })) {
      throw std::invalid_argument("negative exponent in generator");
    }
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  // A divisor of g is lexicographically <= g, so scanning in lex order only
  // needs to compare against already accepted generators.
  std::vector<ExponentVector> minimal;
  for (auto& g : generators) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                       [&](const ExponentVector& m) { return divides(m, g); });
    if (!redundant) minimal.push_back(std::move(g));
  }
  return MonomialIdeal(n, std::move(minimal));
}

MonomialIdeal MonomialIdeal::unit(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("monomial ideal needs dimension >= 1");
  return MonomialIdeal(dim, {ExponentVector(dim, 0)});
}

MonomialIdeal MonomialIdeal::principal(ExponentVector exponents) {
  return minimalize({std::move(exponents)});
}

bool MonomialIdeal::is_unit() const noexcept {
  return generators_.size() == 1 &&
         std::all_of(generators_[0].begin(), generators_[0].end(), [](std::int64_t e) { return e == 0; });
}

bool MonomialIdeal::contains(std::span<const std::int64_t> v) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const ExponentVector& g) { return divides(g, v); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("ideal dimension mismatch");
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const ExponentVector& g) { return contains(g); });
}

ExponentVector MonomialIdeal::max_exponents() const {
  ExponentVector m(dim_, 0);
  for (const auto& g : generators_) {
    for (std::size_t i = 0; i < dim_; ++i) m[i] = std::max(m[i], g[i]);
  }
  return m;
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("ideal dimension mismatch");
  auto gens = generators_;
  gens.insert(gens.end(), other.generators_.begin(), other.generators_.end());
  return minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::operator*(const MonomialIdeal& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("ideal dimension mismatch");
  std::vector<ExponentVector> gens;
  gens.reserve(generators_.size() * other.generators_.size());
  for (const auto& a : generators_) {
    for (const auto& b : other.generators_) {
      ExponentVector s(dim_);
      for (std::size_t i = 0; i < dim_; ++i) s[i] = a[i] + b[i];
      gens.push_back(std::move(s));
    }
  }
  return minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::power(unsigned k) const {
  MonomialIdeal result = unit(dim_);
  for (unsigned i = 0; i < k; ++i) result = result * *this;
  return result;
}

}  // namespace mulideal
