#pragma once

#include "dea/dataset.hpp"
#include "dea/simplex.hpp"
#include "dea/types.hpp"

#include <string>

namespace dea {

/// Ground-truth classification of every DMU using full-size programs.
/// Exists to be obviously correct, not fast; intended for n up to a few
/// thousand.
struct ClassificationReport {
  enum class Label : uint8_t { extreme_efficient, boundary_nonextreme, interior };

  std::vector<Label> labels;  // one per DMU
  Vector scores;              // output-oriented phi over the full reference
  IndexSet frame;             // extreme-efficient DMUs
  IndexSet boundary;          // frame plus non-extreme boundary DMUs
  Real density = 0;           // |frame| / n
  long lp_count = 0;
};

std::string to_string(ClassificationReport::Label label);

struct OracleOptions {
  SolverOptions solver{};
  int threads = 0;  // 0 = hardware concurrency
};

/// Per DMU: extreme iff the deleted-domain membership gap is positive,
/// interior iff the strict-dominance gap is positive, boundary otherwise.
/// Exact duplicates are collapsed first; duplicated points inherit their
/// representative's label but are never extreme.
ClassificationReport classify_all(const Dataset& dataset,
                                  const OracleOptions& options = {});

}  // namespace dea
