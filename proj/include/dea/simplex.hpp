#pragma once

#include "dea/linear_program.hpp"
#include "dea/types.hpp"

#include <optional>
#include <vector>

namespace dea {

enum class PricingRule { dantzig, bland };

/// Opaque basis snapshot for optional warm starts between solves of
/// identically shaped problems. A carried basis is used only when it is
/// structurally valid and start-feasible for the chosen algorithm;
/// otherwise the solve silently starts cold.
struct Basis {
  Algorithm algorithm = Algorithm::primal_simplex;
  Index num_vars = 0;
  Index num_rows = 0;
  std::vector<Index> basic_columns;  // internal standardized column ids
};

struct SolverOptions {
  Algorithm algorithm = Algorithm::primal_simplex;
  PricingRule pricing = PricingRule::dantzig;
  /// Consecutive degenerate pivots tolerated before the pricing rule is
  /// switched to Bland for the remainder of the solve.
  long stall_limit = 1000;
  long max_iterations = 50000;
  Tolerances tol{};
  const Basis* warm_start = nullptr;  // disabled by default
  Basis* basis_out = nullptr;         // filled on optimal exit when non-null
};

/// Dense simplex solve. Throws IterationLimitError or
/// NumericalInstabilityError; returns status optimal/infeasible/unbounded
/// otherwise. Deterministic for a fixed algorithm, pricing rule, and input.
LpSolution solve(const LinearProgram& lp, const SolverOptions& options = {});

inline LpSolution solve(const LinearProgram& lp, Algorithm algorithm) {
  SolverOptions options;
  options.algorithm = algorithm;
  return solve(lp, options);
}

/// Scale-normalized verification of primal feasibility, dual feasibility
/// (sign conventions of LpSolution::dual), and the duality gap. Used by the
/// solver before reporting an optimal solution and by tests.
bool check_solution(const LinearProgram& lp, const LpSolution& solution,
                    const Tolerances& tol, std::string* why = nullptr);

}  // namespace dea
