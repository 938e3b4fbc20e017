#pragma once

#include <vector>

#include "toric/arith.hpp"

namespace toric {

struct LpResult {
  enum class Status { kOptimal, kInfeasible, kUnbounded };
  Status status = Status::kInfeasible;
  Rational value;  // optimum of c.x when kOptimal
  RatVector x;     // an optimal vertex when kOptimal
};

/// Exact two-phase simplex (Bland's rule): maximize c.x subject to A x = b, x >= 0.
/// A is given by rows; every row has c.size() entries.
LpResult maximize(const std::vector<RatVector>& a, const RatVector& b, const RatVector& c);

/// Convenience for free variables: maximize c.y subject to A y = b with y unrestricted
/// except for y_i >= 0 where nonneg[i] is true.
LpResult maximize_mixed(const std::vector<RatVector>& a, const RatVector& b, const RatVector& c,
                        const std::vector<bool>& nonneg);

}  // namespace toric
