#pragma once

#include "dea/dataset.hpp"
#include "dea/types.hpp"

namespace dea {

/// What the cheap preprocessors know before any LP is solved: the extreme
/// DMUs found by dimension sorting and a frontier-proximity pre-score per
/// DMU in [0, 1] (higher = closer to the frontier).
struct PreprocessorOutput {
  IndexSet extreme_seed;
  Vector prescores;
  Index m_hat = 0;
};

/// Per translated coordinate, the maximizing DMU with ties broken by
/// lexicographic maximality over the remaining translated coordinates (then
/// lowest index for exact duplicates). Every selected DMU is an extreme
/// point of the hull on duplicate-free data. Returns between 1 and m
/// distinct indices.
IndexSet dimension_sort(const Dataset& dataset);

/// Quantile-rank pre-scores: average over dimensions of (1 - rank/n) for
/// inputs and rank/n for outputs, with ascending fractional ranks and ties
/// averaged. Monotone under componentwise dominance.
Vector prescore(const Dataset& dataset);

/// Initializing-subset cardinality: ceil(sqrt(n)).
Index initial_subset_size(Index n);

/// extreme_seed plus the top (p - m_hat) remaining DMUs by descending
/// pre-score, cutoff ties resolved by lower index. Requires
/// m_hat <= p <= n.
IndexSet select_initial_subset(const Dataset& dataset, Index p,
                               const PreprocessorOutput& prep);

PreprocessorOutput run_preprocessors(const Dataset& dataset);

}  // namespace dea
