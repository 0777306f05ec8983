#pragma once

// Exact rational linear programming: two-phase tableau simplex with Bland's
// anti-cycling rule. Variables are free; constraints are a.x {<=,=,>=} b.

#include "trop2/rational.hpp"

#include <vector>

namespace trop2 {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct LinearConstraint {
  RationalVector a;
  Relation rel = Relation::LessEqual;
  Rational b = 0;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value = 0;
  RationalVector x;  // optimal point (Optimal) or last feasible basis (Unbounded)
};

/// Maximizes objective.x over the constraints in num_vars free variables.
LpResult maximize(std::size_t num_vars, const std::vector<LinearConstraint>& constraints,
                  const RationalVector& objective);

/// Feasibility only; returns a feasible point when one exists.
LpResult find_feasible_point(std::size_t num_vars, const std::vector<LinearConstraint>& constraints);

/// Rank of a rational matrix (rows), by exact Gaussian elimination.
std::size_t matrix_rank(std::vector<RationalVector> rows);

}  // namespace trop2
