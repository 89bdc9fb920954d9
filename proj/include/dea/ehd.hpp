#pragma once

#include "dea/dataset.hpp"
#include "dea/preprocess.hpp"
#include "dea/simplex.hpp"
#include "dea/types.hpp"

namespace dea {

struct StepMetrics {
  Index lp_size = 0;  // lambda columns per program in this step
  long lp_count = 0;  // envelopment programs solved
};

/// Four-step boundary identification over an initializing subset. Count
/// identities, holding on every run:
///   step2.lp_count = p - m_hat            step2.lp_size = p
///   step3.lp_count = n - p                step3.lp_size = |B^S|
///   step4.lp_count = |pool| - m_hat       step4.lp_size = |pool|
///   total_lp_count = (n - m_hat) + step4.lp_count
/// where pool = subset_boundary U exterior (plus partial_boundary when the
/// option is set). Auxiliary strict-dominance programs that guard weak
/// efficiency are tallied in aux_lp_count, outside the step accounting.
struct EhdResult {
  IndexSet boundary;          // B
  IndexSet initial_subset;    // A^S, |A^S| = p
  IndexSet subset_boundary;   // B^S
  IndexSet exterior;          // ext_B^S
  IndexSet partial_boundary;  // step-3 points on the partial-hull boundary
  long productivity = 0;      // full-hull interior points caught in steps 2-3
  StepMetrics step2, step3, step4;
  long aux_lp_count = 0;
  long total_lp_count = 0;
  Real wall_time = 0;
};

struct EhdOptions {
  SolverOptions solver{};
  /// Adds step-3 partial-hull boundary points to the step-4 candidate pool.
  /// Off by default, which keeps the step-4 size exactly |B^S U ext_B^S|.
  bool include_partial_boundary_in_step4 = false;
};

/// Step 2: boundary of the subset hull. Envelopment score over the full
/// subset per non-seed member; phi <= 1in the member tolerance marks
/// boundary, otherwise a strict-dominance check separates weakly efficient
/// boundary points from interior ones. Seed members join without a program.
IndexSet step2_boundary_of_subset(const Dataset& dataset,
                                  const IndexSet& initial_subset,
                                  const IndexSet& extreme_seed,
                                  const EhdOptions& options,
                                  StepMetrics* metrics = nullptr,
                                  long* aux_lps = nullptr,
                                  long* interior_found = nullptr);

struct Step3Partition {
  IndexSet exterior;
  IndexSet interior_found;
  IndexSet partial_boundary;
};

/// Step 3: classify everything outside the initial subset against the fixed
/// reference B^S with the deleted-domain envelopment form.
Step3Partition step3_exterior_partition(const Dataset& dataset,
                                        const IndexSet& subset_boundary,
                                        const IndexSet& initial_subset,
                                        const EhdOptions& options,
                                        StepMetrics* metrics = nullptr);

/// Step 4: boundary of the candidate pool's hull, same criterion as step 2.
IndexSet step4_final_boundary(const Dataset& dataset, const IndexSet& pool,
                              const IndexSet& extreme_seed,
                              const EhdOptions& options,
                              StepMetrics* metrics = nullptr,
                              long* aux_lps = nullptr);

/// Full phase 1: subset selection, subset boundary, exterior partition,
/// final boundary. Requires m_hat <= p <= n.
EhdResult run_ehd(const Dataset& dataset, Index p,
                  const PreprocessorOutput& prep, const EhdOptions& options = {});

}  // namespace dea
