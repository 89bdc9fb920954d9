#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace dea {

using Real = double;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Sorted set of DMU indices (0-based).
using IndexSet = std::vector<Index>;

/// Numerical tolerances shared across the solver and the classification layer.
///
/// Residual checks are scale-normalized, so these behave like relative
/// tolerances on well-scaled data. `member` is the classification threshold
/// on the membership gap delta and on phi-1; it sits one order above the
/// solver's duality-gap tolerance so solver noise cannot flip labels.
struct Tolerances {
  Real feas = 1e-7;
  Real gap = 1e-6;
  Real pivot = 1e-9;
  Real member = 1e-6;

  /// Defaults overridden by DEA_FEAS_TOL, DEA_GAP_TOL, DEA_PIVOT_TOL,
  /// DEA_MEMBER_TOL when set in the environment.
  static Tolerances from_env();
};

inline bool set_contains(const IndexSet& sorted, Index value) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), value);
  return it != sorted.end() && *it == value;
}

inline IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline void sort_unique(IndexSet& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace dea
