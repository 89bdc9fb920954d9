#pragma once

#include "dea/dataset.hpp"
#include "dea/models.hpp"
#include "dea/simplex.hpp"
#include "dea/types.hpp"

namespace dea {

/// Outcome of a hull membership test. When the point is exterior,
/// (hyperplane_pi, hyperplane_beta) is a separation certificate: every
/// generator satisfies pi . a + beta <= 0 while the tested point attains
/// pi . b + beta = delta > 0.
struct MembershipResult {
  Real delta = 0;
  Vector lambda;
  Vector hyperplane_pi;
  Real hyperplane_beta = 0;
  bool is_member = false;
  long iterations = 0;
};

/// Solves the membership program for `point` against `generators`. The
/// program is feasible and bounded by construction, so any other solver
/// outcome raises std::logic_error.
MembershipResult membership_test(const Eigen::Ref<const Matrix>& generators,
                                 const Vector& point,
                                 const SolverOptions& options = {});

struct ScoreResult {
  Real phi = 0;
  Vector lambda;
  bool feasible = false;
};

/// Output-oriented VRS score of `target` over `reference`. With
/// deleted_domain the program may be infeasible; feasible=false and phi=NaN
/// report that case.
ScoreResult output_oriented_score(const Dataset& dataset,
                                  const IndexSet& reference, Index target,
                                  bool deleted_domain,
                                  const SolverOptions& options = {});

/// Optimal t of the strict-dominance program; t > tol means the target is
/// strictly inside the hull of the reference set.
Real dominance_gap(const Dataset& dataset, const IndexSet& reference,
                   Index target, const SolverOptions& options = {});

enum class Step3Label { exterior, in_hull };

struct Step3Result {
  Step3Label label = Step3Label::exterior;
  Real phi = 0;  // NaN when the deleted-domain program is infeasible
};

/// Deleted-domain exteriority test: exterior when the program is infeasible
/// or phi < 1 - gap tolerance; otherwise in_hull with phi reported
/// (phi > 1 strictly interior, phi == 1 on the partial-hull boundary).
Step3Result exterior_test_step3(const Dataset& dataset,
                                const IndexSet& reference, Index target,
                                const SolverOptions& options = {});

}  // namespace dea
