#pragma once

#include "dea/dataset.hpp"
#include "dea/simplex.hpp"
#include "dea/types.hpp"

#include <utility>
#include <vector>

namespace dea {

struct Phase2Result {
  std::vector<std::pair<Index, Real>> scores;  // (dmu, phi), ascending dmu
  Index lp_size = 0;                           // |reference| per program
  long lp_count = 0;
  Real wall_time = 0;
};

/// Scores every target with the deleted-domain envelopment form over a
/// phase-1 reference set. Targets must be disjoint from the reference.
/// Scores depend only on the hull the reference generates, so any superset
/// of the frame yields identical values.
Phase2Result score_all(const Dataset& dataset, const IndexSet& reference,
                       const IndexSet& targets,
                       const SolverOptions& options = {});

}  // namespace dea
