#include "dea/ehd.hpp"

#include "dea/membership.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace dea {

namespace {
using Clock = std::chrono::steady_clock;

// Shared boundary criterion for steps 2 and 4: boundary iff phi <= 1 + tol,
// or (weak efficiency) the strict-dominance gap is within tolerance.
bool is_boundary_of(const Dataset& ds, const IndexSet& reference, Index target,
                    const EhdOptions& options, long& lp_count, long& aux_lps) {
  const ScoreResult score =
      output_oriented_score(ds, reference, target, false, options.solver);
  ++lp_count;
  if (score.phi <= 1.0 + options.solver.tol.member) return true;
  const Real t = dominance_gap(ds, reference, target, options.solver);
  ++aux_lps;
  return t <= options.solver.tol.member;
}
}  // namespace

IndexSet step2_boundary_of_subset(const Dataset& ds,
                                  const IndexSet& initial_subset,
                                  const IndexSet& extreme_seed,
                                  const EhdOptions& options,
                                  StepMetrics* metrics, long* aux_lps,
                                  long* interior_found) {
  for (const Index s : extreme_seed)
    if (!set_contains(initial_subset, s))
      throw std::invalid_argument("extreme seed must lie inside the subset");

  IndexSet boundary;
  long lps = 0, aux = 0, interior = 0;
  for (const Index i : initial_subset) {
    if (set_contains(extreme_seed, i)) {
      boundary.push_back(i);
      continue;
    }
    if (is_boundary_of(ds, initial_subset, i, options, lps, aux))
      boundary.push_back(i);
    else
      ++interior;
  }
  if (metrics) {
    metrics->lp_size = static_cast<Index>(initial_subset.size());
    metrics->lp_count = lps;
  }
  if (aux_lps) *aux_lps += aux;
  if (interior_found) *interior_found += interior;
  return boundary;
}

Step3Partition step3_exterior_partition(const Dataset& ds,
                                        const IndexSet& subset_boundary,
                                        const IndexSet& initial_subset,
                                        const EhdOptions& options,
                                        StepMetrics* metrics) {
  if (subset_boundary.empty())
    throw std::invalid_argument("subset boundary must be non-empty");

  Step3Partition out;
  long lps = 0;
  for (Index i = 0; i < ds.n(); ++i) {
    if (set_contains(initial_subset, i)) continue;
    const Step3Result r =
        exterior_test_step3(ds, subset_boundary, i, options.solver);
    ++lps;
    if (r.label == Step3Label::exterior) {
      out.exterior.push_back(i);
    } else if (r.phi > 1.0 + options.solver.tol.member) {
      out.interior_found.push_back(i);
    } else {
      out.partial_boundary.push_back(i);
    }
  }
  if (metrics) {
    metrics->lp_size = static_cast<Index>(subset_boundary.size());
    metrics->lp_count = lps;
  }
  return out;
}

IndexSet step4_final_boundary(const Dataset& ds, const IndexSet& pool,
                              const IndexSet& extreme_seed,
                              const EhdOptions& options, StepMetrics* metrics,
                              long* aux_lps) {
  IndexSet boundary;
  long lps = 0, aux = 0;
  for (const Index c : pool) {
    if (set_contains(extreme_seed, c)) {
      boundary.push_back(c);
      continue;
    }
    if (is_boundary_of(ds, pool, c, options, lps, aux)) boundary.push_back(c);
  }
  if (metrics) {
    metrics->lp_size = static_cast<Index>(pool.size());
    metrics->lp_count = lps;
  }
  if (aux_lps) *aux_lps += aux;
  return boundary;
}

EhdResult run_ehd(const Dataset& ds, Index p, const PreprocessorOutput& prep,
                  const EhdOptions& options) {
  const auto t_start = Clock::now();
  EhdResult result;
  result.initial_subset = select_initial_subset(ds, p, prep);

  long step2_interior = 0;
  result.subset_boundary = step2_boundary_of_subset(
      ds, result.initial_subset, prep.extreme_seed, options, &result.step2,
      &result.aux_lp_count, &step2_interior);

  Step3Partition part = step3_exterior_partition(
      ds, result.subset_boundary, result.initial_subset, options,
      &result.step3);
  result.exterior = std::move(part.exterior);
  result.partial_boundary = std::move(part.partial_boundary);
  result.productivity =
      step2_interior + static_cast<long>(part.interior_found.size());

  IndexSet pool = set_union(result.subset_boundary, result.exterior);
  if (options.include_partial_boundary_in_step4)
    pool = set_union(pool, result.partial_boundary);
  result.boundary = step4_final_boundary(ds, pool, prep.extreme_seed, options,
                                         &result.step4, &result.aux_lp_count);

  result.total_lp_count =
      result.step2.lp_count + result.step3.lp_count + result.step4.lp_count;
  result.wall_time =
      std::chrono::duration<Real>(Clock::now() - t_start).count();
  return result;
}

}  // namespace dea
