#pragma once

#include <vector>

#include "mulideal/rational.hpp"

namespace mulideal::lp {

enum class Status { optimal, infeasible, unbounded };

struct Result {
  Status status = Status::infeasible;
  Rational objective;      // valid when optimal
  std::vector<Rational> x; // a maximizer when optimal
};

// Exact two-phase primal simplex with Bland's rule:
//   maximize  c.x  subject to  A x = b,  x >= 0.
// `rows` is the dense m x n matrix A. Terminates on every input.
Result maximize(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs,
                const std::vector<Rational>& objective);

}  // namespace mulideal::lp
