#include "dea/membership.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dea {

MembershipResult membership_test(const Eigen::Ref<const Matrix>& generators,
                                 const Vector& point,
                                 const SolverOptions& options) {
  const LinearProgram lp = build_membership_lp(generators, point);
  const LpSolution sol = solve(lp, options);
  if (sol.status != SolveStatus::optimal)
    throw std::logic_error(
        "membership program must be feasible and bounded; solver disagreed");

  const Index k = generators.rows();
  const Index m = generators.cols();
  MembershipResult out;
  out.delta = std::max(Real(0), sol.objective_value);
  out.lambda = sol.primal.head(k);
  out.hyperplane_pi = sol.dual.head(m).cwiseMax(0.0);
  out.hyperplane_beta = sol.dual(m);
  out.is_member = out.delta <= options.tol.member;
  out.iterations = sol.iterations;
  return out;
}

ScoreResult output_oriented_score(const Dataset& ds, const IndexSet& reference,
                                  Index target, bool deleted_domain,
                                  const SolverOptions& options) {
  const LinearProgram lp =
      build_output_oriented_vrs(ds, reference, target, deleted_domain);
  const LpSolution sol = solve(lp, options);
  ScoreResult out;
  if (sol.status == SolveStatus::infeasible) {
    if (!deleted_domain)
      throw std::logic_error(
          "envelopment program with the target in the reference set "
          "cannot be infeasible");
    out.feasible = false;
    out.phi = std::numeric_limits<Real>::quiet_NaN();
    return out;
  }
  if (sol.status != SolveStatus::optimal)
    throw std::logic_error("envelopment program cannot be unbounded");
  out.feasible = true;
  out.phi = sol.objective_value;
  out.lambda = sol.primal.head(static_cast<Index>(reference.size()));
  return out;
}

Real dominance_gap(const Dataset& ds, const IndexSet& reference, Index target,
                   const SolverOptions& options) {
  const LinearProgram lp = build_dominance_lp(ds, reference, target);
  const LpSolution sol = solve(lp, options);
  if (sol.status != SolveStatus::optimal)
    throw std::logic_error(
        "dominance program must be feasible and bounded here");
  return sol.objective_value;
}

Step3Result exterior_test_step3(const Dataset& ds, const IndexSet& reference,
                                Index target, const SolverOptions& options) {
  if (set_contains(reference, target))
    throw std::invalid_argument("step-3 target must lie outside the reference");
  const ScoreResult score =
      output_oriented_score(ds, reference, target, true, options);
  Step3Result out;
  if (!score.feasible || score.phi < 1.0 - options.tol.gap) {
    out.label = Step3Label::exterior;
    out.phi = score.feasible ? score.phi
                             : std::numeric_limits<Real>::quiet_NaN();
  } else {
    out.label = Step3Label::in_hull;
    out.phi = score.phi;
  }
  return out;
}

}  // namespace dea
