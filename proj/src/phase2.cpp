#include "dea/phase2.hpp"

#include "dea/membership.hpp"

#include <chrono>
#include <limits>
#include <stdexcept>

namespace dea {

Phase2Result score_all(const Dataset& ds, const IndexSet& reference,
                       const IndexSet& targets, const SolverOptions& options) {
  if (reference.empty())
    throw std::invalid_argument("phase-2 reference must be non-empty");
  for (const Index t : targets)
    if (set_contains(reference, t))
      throw std::invalid_argument("phase-2 targets must be outside the reference");

  const auto t_start = std::chrono::steady_clock::now();
  Phase2Result result;
  result.lp_size = static_cast<Index>(reference.size());
  result.scores.reserve(targets.size());
  for (const Index t : targets) {
    const ScoreResult s = output_oriented_score(ds, reference, t, true, options);
    ++result.lp_count;
    result.scores.emplace_back(
        t, s.feasible ? s.phi : std::numeric_limits<Real>::quiet_NaN());
  }
  result.wall_time = std::chrono::duration<Real>(
                         std::chrono::steady_clock::now() - t_start)
                         .count();
  return result;
}

}  // namespace dea
