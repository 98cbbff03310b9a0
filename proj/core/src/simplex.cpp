#include "mulideal/simplex.hpp"

#include <optional>
#include <stdexcept>

namespace mulideal::lp {
namespace {

// Dense tableau. Columns [0, n) are structural, [n, n + m) artificial.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs, std::size_t n)
      : n_(n), m_(rows.size()), a_(std::move(rows)), b_(std::move(rhs)), basis_(m_) {
    for (std::size_t i = 0; i < m_; ++i) {
      if (a_[i].size() != n_) throw std::invalid_argument("lp: ragged constraint matrix");
      if (b_[i] < 0) {
        for (auto& v : a_[i]) v = -v;
        b_[i] = -b_[i];
      }
      a_[i].resize(n_ + m_);
      a_[i][n_ + i] = 1;
      basis_[i] = n_ + i;
    }
  }

  // Runs simplex on `cost` (length n + m). Returns false if unbounded.
  bool optimize(const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
    while (true) {
      const auto reduced = reduced_costs(cost);
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < cols(); ++j) {
        if (allowed[j] && reduced[j] > 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (a_[i][*entering] <= 0) continue;
        Rational ratio = b_[i] / a_[i][*entering];
        if (!leaving || ratio < best || (ratio == best && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

  Rational value(const std::vector<Rational>& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < m_; ++i) v += cost[basis_[i]] * b_[i];
    return v;
  }

  // Pivots artificial variables out of the basis after phase one; rows that
  // cannot be cleaned are redundant and get dropped.
  void expel_artificials() {
    for (std::size_t i = 0; i < m_;) {
      if (basis_[i] < n_) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < n_; ++j) {
        if (a_[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col) {
        pivot(i, *col);
        ++i;
      } else {
        a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(i));
        b_.erase(b_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        --m_;
      }
    }
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(n_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = b_[i];
    }
    return x;
  }

  std::size_t cols() const { return a_.empty() ? n_ : a_[0].size(); }

 private:
  std::vector<Rational> reduced_costs(const std::vector<Rational>& cost) const {
    std::vector<Rational> r(cost.begin(), cost.begin() + static_cast<std::ptrdiff_t>(cols()));
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < cols(); ++j) {
        if (a_[i][j] != 0) r[j] -= cb * a_[i][j];
      }
    }
    return r;
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational p = a_[row][col];
    for (auto& v : a_[row]) {
      if (v != 0) v /= p;
    }
    b_[row] /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || a_[i][col] == 0) continue;
      const Rational f = a_[i][col];
      for (std::size_t j = 0; j < a_[i].size(); ++j) {
        if (a_[row][j] != 0) a_[i][j] -= f * a_[row][j];
      }
      b_[i] -= f * b_[row];
    }
    basis_[row] = col;
  }

  std::size_t n_;
  std::size_t m_;
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::vector<std::size_t> basis_;
};

}  // namespace

Result maximize(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs,
                const std::vector<Rational>& objective) {
  const std::size_t n = objective.size();
  const std::size_t m = rows.size();
  if (rhs.size() != m) throw std::invalid_argument("lp: rhs size mismatch");

  Tableau t(std::move(rows), std::move(rhs), n);

  std::vector<Rational> phase1(n + m, 0);
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
  std::vector<bool> all(n + m, true);
  t.optimize(phase1, all);  // bounded above by 0
  if (t.value(phase1) < 0) return {Status::infeasible, 0, {}};

  t.expel_artificials();
  std::vector<Rational> cost(t.cols(), 0);
  for (std::size_t j = 0; j < n; ++j) cost[j] = objective[j];
  std::vector<bool> structural(t.cols(), false);
  for (std::size_t j = 0; j < n; ++j) structural[j] = true;
  if (!t.optimize(cost, structural)) return {Status::unbounded, 0, {}};

  Result r;
  r.status = Status::optimal;
  r.objective = t.value(cost);
  r.x = t.solution();
  return r;
}

}  // namespace mulideal::lp
