#pragma once

#include "dea/dataset.hpp"
#include "dea/linear_program.hpp"
#include "dea/types.hpp"

namespace dea {

/// Hull membership program for a test point b against generator points
/// (one per row of `generators`):
///
///   min delta  s.t.  sum_i a^i l_i + e delta >= b,  sum_i l_i = 1,
///                    l >= 0, delta >= 0.
///
/// Always feasible and bounded. Structural variables: |generators| + 1.
LinearProgram build_membership_lp(const Eigen::Ref<const Matrix>& generators,
                                  const Vector& point);

/// Output-oriented VRS envelopment program over a reference set:
///
///   max phi  s.t.  sum_j X_j l_j <= X_t,  sum_j Y_j l_j >= phi Y_t,
///                  sum_j l_j = 1,  l >= 0.
///
/// With deleted_domain the target must sit outside the reference set (the
/// program may then be infeasible); otherwise it must be a member.
LinearProgram build_output_oriented_vrs(const Dataset& dataset,
                                        const IndexSet& reference, Index target,
                                        bool deleted_domain);

/// Strict-dominance program deciding interiority:
///
///   max t  s.t.  sum_j a^j l_j - t e >= a^target,  sum_j l_j = 1,
///                l >= 0, t free.
///
/// t* > 0 iff some hull point strictly dominates the target in every
/// coordinate.
LinearProgram build_dominance_lp(const Dataset& dataset,
                                 const IndexSet& reference, Index target);

}  // namespace dea
