#pragma once

#include "dea/dataset.hpp"
#include "dea/simplex.hpp"
#include "dea/types.hpp"

namespace dea {

/// Frame identification metrics. lp_sizes counts lambda columns only (the
/// auxiliary delta column is excluded, so sizes align with the partial-frame
/// cardinality at each solve). Exactly n - |init_frame| programs are solved
/// and |frame| - |init_frame| of them end in a hyperplane translation.
struct FrameResult {
  IndexSet frame;
  std::vector<Index> admission_order;  // new frame elements in found order
  long lp_count = 0;
  std::vector<Index> lp_sizes;
  Real avg_lp_size = 0;
  long hyperplane_translations = 0;
  long inner_products = 0;
  Real wall_time = 0;         // whole phase-1 run, seconds
  Real translation_time = 0;  // inner-product scans only, seconds
};

struct BuildHullOptions {
  SolverOptions solver{};
  /// Deleted-domain check that every initializing point is extreme; costly
  /// (one full-size program per point), intended for tests and debugging.
  bool validate_init_frame = false;
  /// When a translation ties on the certificate functional, re-test the tied
  /// candidates against each other and admit one that is exterior to the
  /// others' hull. Off by default; the lexicographic rule already picks an
  /// extreme point whenever the tie is exact.
  bool exact_tie_resolution = false;
};

/// Grows a nested partial frame one extreme point at a time until every
/// point is classified. `order` must be a permutation of the indices outside
/// `init_frame`; a test point that triggers a translation admitting some
/// other point stays in the pool and is retested against the grown hull.
FrameResult build_hull(const Dataset& dataset, const IndexSet& init_frame,
                       const std::vector<Index>& order,
                       const BuildHullOptions& options = {});

/// Translation step: argmax of pi . a over the candidate points, ties broken
/// lexicographically on translated coordinates, then by lowest index.
/// Requires a valid separation certificate (some candidate has
/// pi . a + beta > 0); throws std::logic_error otherwise. Adds
/// |candidates| to *inner_products when given.
Index translate_hyperplane(const Matrix& translated,
                           const std::vector<Index>& candidates,
                           const Vector& pi, Real beta,
                           long* inner_products = nullptr);

}  // namespace dea
