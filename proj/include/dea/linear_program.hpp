#pragma once

#include "dea/types.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace dea {

enum class Sense { minimize, maximize };
enum class Relation { less_equal, greater_equal, equal };
enum class SolveStatus { optimal, infeasible, unbounded };
enum class Algorithm { primal_simplex, dual_simplex };

inline constexpr Real kInfinity = std::numeric_limits<Real>::infinity();

/// Dense LP in row-relation form:
///
///   opt  c'x   s.t.  A_i x {<=,>=,=} b_i,   lower <= x <= upper.
///
/// Lower bounds default to 0 and may be -inf (free variables); upper bounds
/// default to +inf. Matrix, objective and rhs entries must be finite.
struct LinearProgram {
  Sense sense = Sense::minimize;
  Vector objective;
  Matrix constraint_matrix;  // rows = constraints
  std::vector<Relation> row_relations;
  Vector rhs;
  Vector variable_lower_bounds;  // empty means all 0
  Vector variable_upper_bounds;  // empty means all +inf

  Index num_vars() const { return objective.size(); }
  Index num_rows() const { return rhs.size(); }

  Real lower(Index j) const {
    return variable_lower_bounds.size() ? variable_lower_bounds(j) : Real(0);
  }
  Real upper(Index j) const {
    return variable_upper_bounds.size() ? variable_upper_bounds(j) : kInfinity;
  }

  /// Throws std::invalid_argument on inconsistent dimensions, non-finite
  /// coefficients, or crossed bounds.
  void validate() const;
};

/// Result of a simplex solve.
///
/// Dual sign convention, per original row: for a minimization,
/// >= rows carry duals >= 0, <= rows duals <= 0, = rows are free; for a
/// maximization the signs flip. At optimality with default bounds,
/// objective_value == dual . rhs within the gap tolerance.
struct LpSolution {
  SolveStatus status = SolveStatus::optimal;
  Real objective_value = 0.0;
  Vector primal;  // one per variable
  Vector dual;    // one per constraint
  long iterations = 0;
  Algorithm algorithm = Algorithm::primal_simplex;
  bool used_bland_fallback = false;
};

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IterationLimitError : SolverError {
  using SolverError::SolverError;
};
struct NumericalInstabilityError : SolverError {
  using SolverError::SolverError;
};

}  // namespace dea
