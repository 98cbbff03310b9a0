#pragma once

#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

#include "mulideal/monomial_ideal.hpp"
#include "mulideal/rational.hpp"

namespace mulideal {

inline constexpr std::size_t kMaxPolyhedronDim = 6;

using RationalVector = std::vector<Rational>;

// Half-space <normal, u> >= offset. Normals are nonnegative and primitive.
struct Facet {
  ExponentVector normal;
  std::int64_t offset = 0;

  // Coordinate facets u_i >= 0 have offset zero; every other facet is nontrivial.
  bool is_nontrivial() const noexcept { return offset > 0; }

  friend auto operator<=>(const Facet&, const Facet&) = default;
};

// conv(generators) + nonnegative orthant, with an irredundant facet list.
class NewtonPolyhedron {
 public:
  // Throws std::invalid_argument for dim > kMaxPolyhedronDim.
  explicit NewtonPolyhedron(const MonomialIdeal& ideal);

  std::size_t dim() const noexcept { return ideal_.dim(); }
  const MonomialIdeal& ideal() const noexcept { return ideal_; }
  const std::vector<ExponentVector>& vertices() const noexcept { return vertices_; }
  const std::vector<Facet>& facets() const noexcept { return facets_; }
  std::vector<Facet> nontrivial_facets() const;

 private:
  MonomialIdeal ideal_;
  std::vector<ExponentVector> vertices_;
  std::vector<Facet> facets_;
};

enum class Membership { closed, strict };

// u in c*P (closed) or in the interior of c*P (strict), decided on the facet
// inequalities. Throws std::invalid_argument for c <= 0 or negative entries.
bool contains(const NewtonPolyhedron& p, std::span<const Rational> u, const Rational& c, Membership mode);

// Same question answered by an exact LP on the generators alone: u/c is a
// convex combination of generators plus a nonnegative slack; the strict mode
// maximizes a uniform shift delta with u/c - delta*(1,...,1) in P.
bool contains_lp(const MonomialIdeal& ideal, std::span<const Rational> u, const Rational& c, Membership mode);

// Fast membership of integer points u in c*P for a fixed c, using integer
// arithmetic on the facet inequalities: q<normal,u> >= p*offset for c = p/q.
class ScaledMembership {
 public:
  ScaledMembership(const NewtonPolyhedron& p, const Rational& c, Membership mode);
  bool operator()(std::span<const std::int64_t> u) const;

 private:
  struct Row {
    ExponentVector normal;
    Integer scaled_offset;  // p * offset
    std::int64_t small_offset = 0;
    bool small = false;
  };
  std::vector<Row> rows_;
  Integer den_;
  std::int64_t small_den_ = 0;
  bool strict_;
};

// All lattice points 0 <= v <= bound, in lexicographic order, each once.
class LatticeBox {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = ExponentVector;
    using difference_type = std::ptrdiff_t;
    using pointer = const ExponentVector*;
    using reference = const ExponentVector&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_); }

   private:
    friend class LatticeBox;
    iterator(const ExponentVector* bound, bool done) : bound_(bound), current_(bound->size(), 0), done_(done) {}
    const ExponentVector* bound_ = nullptr;
    ExponentVector current_;
    bool done_ = true;
  };

  // Throws std::invalid_argument on negative bound entries.
  explicit LatticeBox(ExponentVector bound);

  iterator begin() const { return iterator(&bound_, false); }
  iterator end() const { return iterator(&bound_, true); }
  std::uint64_t size() const;
  const ExponentVector& bound() const noexcept { return bound_; }

 private:
  ExponentVector bound_;
};

LatticeBox lattice_points_box(ExponentVector bound);

}  // namespace mulideal
