#include "mulideal/polyhedra.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "mulideal/simplex.hpp"

namespace mulideal {
namespace {

// Fraction-free (Bareiss) determinant of a square integer matrix.
Integer determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Vector orthogonal to the n-1 rows of `dirs` (generalized cross product).
std::vector<Integer> orthogonal_complement(const std::vector<std::vector<std::int64_t>>& dirs, std::size_t n) {
  std::vector<Integer> w(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<Integer>> minor(dirs.size(), std::vector<Integer>());
    for (std::size_t r = 0; r < dirs.size(); ++r) {
      minor[r].reserve(n - 1);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != col) minor[r].emplace_back(static_cast<long>(dirs[r][j]));
      }
    }
    Integer d = determinant(std::move(minor));
    w[col] = (col % 2 == 0) ? d : Integer(-d);
  }
  return w;
}

std::size_t rank(std::vector<std::vector<Rational>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

// Calls f(indices) for every k-subset of {0, ..., n-1}.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(idx);
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
  if (s > INT64_MAX || s < INT64_MIN) throw std::overflow_error("exponent inner product overflows 64 bits");
  return static_cast<std::int64_t>(s);
}

void check_scale(const Rational& c) {
  if (c <= 0) throw std::invalid_argument("scaling factor c must be positive, got " + to_string(c));
}

void check_point(std::span<const Rational> u, std::size_t n) {
  if (u.size() != n) throw std::invalid_argument("point dimension mismatch");
  for (const auto& x : u) {
    if (x < 0) throw std::invalid_argument("point has a negative entry: " + to_string(x));
  }
}

}  // namespace

NewtonPolyhedron::NewtonPolyhedron(const MonomialIdeal& ideal) : ideal_(ideal) {
  const std::size_t n = ideal.dim();
  if (n > kMaxPolyhedronDim) {
    throw std::invalid_argument("Newton polyhedra are supported up to dimension " + std::to_string(kMaxPolyhedronDim) +
                                ", got " + std::to_string(n));
  }
  const auto& gens = ideal.generators();

  // A facet touches some generator v0 and is spanned, inside its hyperplane,
  // by n-1 independent directions drawn from {v - v0} and the unit rays.
  std::set<Facet> found;
  for (std::size_t base = 0; base < gens.size(); ++base) {
    std::vector<std::vector<std::int64_t>> pool;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (k == base) continue;
      std::vector<std::int64_t> d(n);
      for (std::size_t i = 0; i < n; ++i) d[i] = gens[k][i] - gens[base][i];
      pool.push_back(std::move(d));
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::int64_t> e(n, 0);
      e[i] = 1;
      pool.push_back(std::move(e));
    }
    for_each_subset(pool.size(), n - 1, [&](const std::vector<std::size_t>& pick) {
      std::vector<std::vector<std::int64_t>> dirs;
      dirs.reserve(pick.size());
      for (auto j : pick) dirs.push_back(pool[j]);
      auto w = orthogonal_complement(dirs, n);
      const bool any_pos = std::any_of(w.begin(), w.end(), [](const Integer& x) { return x > 0; });
      const bool any_neg = std::any_of(w.begin(), w.end(), [](const Integer& x) { return x < 0; });
      if (any_pos == any_neg) return;  // zero vector or mixed signs
      Integer g = 0;
      for (auto& x : w) {
        if (any_neg) x = -x;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      }
      Facet f;
      f.normal.resize(n);
      for (std::size_t i = 0; i < n; ++i) f.normal[i] = to_int64(w[i] / g);
      f.offset = dot(f.normal, gens[base]);
      for (const auto& v : gens) {
        if (dot(f.normal, v) < f.offset) return;
      }
      found.insert(std::move(f));
    });
  }
  facets_.assign(found.begin(), found.end());

  for (const auto& v : gens) {
    std::vector<std::vector<Rational>> tight;
    for (const auto& f : facets_) {
      if (dot(f.normal, v) == f.offset) {
        std::vector<Rational> row;
        for (auto x : f.normal) row.emplace_back(static_cast<long>(x));
        tight.push_back(std::move(row));
      }
    }
    if (rank(std::move(tight)) == n) vertices_.push_back(v);
  }
}

std::vector<Facet> NewtonPolyhedron::nontrivial_facets() const {
  std::vector<Facet> out;
  std::copy_if(facets_.begin(), facets_.end(), std::back_inserter(out), [](const Facet& f) { return f.is_nontrivial(); });
  return out;
}

bool contains(const NewtonPolyhedron& p, std::span<const Rational> u, const Rational& c, Membership mode) {
  check_scale(c);
  check_point(u, p.dim());
  for (const auto& f : p.facets()) {
    Rational lhs = 0;
    for (std::size_t i = 0; i < u.size(); ++i) lhs += u[i] * static_cast<long>(f.normal[i]);
    const Rational rhs = c * static_cast<long>(f.offset);
    if (mode == Membership::closed ? lhs < rhs : lhs <= rhs) return false;
  }
  return true;
}

bool contains_lp(const MonomialIdeal& ideal, std::span<const Rational> u, const Rational& c, Membership mode) {
  check_scale(c);
  const std::size_t n = ideal.dim();
  check_point(u, n);
  const auto& gens = ideal.generators();
  const std::size_t k = gens.size();
  const bool strict = mode == Membership::strict;
  // Columns: lambda_1..lambda_k, slack_1..slack_n, [delta].
  const std::size_t cols = k + n + (strict ? 1 : 0);
  std::vector<std::vector<Rational>> rows(n + 1, std::vector<Rational>(cols, 0));
  std::vector<Rational> rhs(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) rows[i][j] = static_cast<long>(gens[j][i]);
    rows[i][k + i] = 1;
    if (strict) rows[i][k + n] = 1;
    rhs[i] = u[i] / c;
  }
  for (std::size_t j = 0; j < k; ++j) rows[n][j] = 1;
  rhs[n] = 1;
  std::vector<Rational> objective(cols, 0);
  if (strict) objective[k + n] = 1;

  const auto r = lp::maximize(std::move(rows), std::move(rhs), objective);
  if (r.status == lp::Status::infeasible) return false;
  if (!strict) return true;
  return r.status == lp::Status::unbounded || r.objective > 0;
}

ScaledMembership::ScaledMembership(const NewtonPolyhedron& p, const Rational& c, Membership mode)
    : den_(c.get_den()), strict_(mode == Membership::strict) {
  check_scale(c);
  const bool small_den = fits_int64(den_);
  if (small_den) small_den_ = to_int64(den_);
  for (const auto& f : p.facets()) {
    Row row;
    row.normal = f.normal;
    row.scaled_offset = c.get_num() * static_cast<long>(f.offset);
    row.small = small_den && fits_int64(row.scaled_offset);
    if (row.small) row.small_offset = to_int64(row.scaled_offset);
    rows_.push_back(std::move(row));
  }
}

bool ScaledMembership::operator()(std::span<const std::int64_t> u) const {
  for (const auto& row : rows_) {
    __int128 s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += static_cast<__int128>(row.normal[i]) * u[i];
    bool ok;
    if (row.small && s <= INT64_MAX && s >= INT64_MIN) {
      // |den * s| < 2^126, no overflow
      const __int128 lhs = static_cast<__int128>(small_den_) * static_cast<std::int64_t>(s);
      ok = strict_ ? lhs > row.small_offset : lhs >= row.small_offset;
    } else {
      const Integer lhs = den_ * Integer(std::to_string(static_cast<long long>(s)));
      ok = strict_ ? lhs > row.scaled_offset : lhs >= row.scaled_offset;
    }
    if (!ok) return false;
  }
  return true;
}

LatticeBox::LatticeBox(ExponentVector bound) : bound_(std::move(bound)) {
  if (std::any_of(bound_.begin(), bound_.end(), [](std::int64_t b) { return b < 0; })) {
    throw std::invalid_argument("lattice box bound must be nonnegative");
  }
}

std::uint64_t LatticeBox::size() const {
  std::uint64_t s = 1;
  for (auto b : bound_) s *= static_cast<std::uint64_t>(b) + 1;
  return s;
}

LatticeBox::iterator& LatticeBox::iterator::operator++() {
  std::size_t i = current_.size();
  while (i > 0) {
    --i;
    if (current_[i] < (*bound_)[i]) {
      ++current_[i];
      return *this;
    }
    current_[i] = 0;
  }
  done_ = true;
  return *this;
}

LatticeBox lattice_points_box(ExponentVector bound) { return LatticeBox(std::move(bound)); }

}  // namespace mulideal
