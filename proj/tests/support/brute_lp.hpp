#pragma once

// Independent LP oracle for small instances: enumerate every basic solution
// of the slack-augmented equality system and keep the best feasible one.
// Deliberately shares no code with the solver under test. Callers must keep
// instances bounded (e.g. via an explicit box row) and stick to default
// variable bounds (0, +inf).

#include "dea/linear_program.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <vector>

namespace dea::testing {

struct BruteResult {
  SolveStatus status = SolveStatus::infeasible;
  Real objective = 0;
};

inline BruteResult brute_force_lp(const LinearProgram& lp) {
  const Index n = lp.num_vars();
  const Index m = lp.num_rows();
  for (Index j = 0; j < n; ++j) {
    if (lp.lower(j) != 0 || lp.upper(j) != kInfinity)
      throw std::invalid_argument("brute oracle needs default bounds");
  }

  Index ncols = n;
  std::vector<Index> slack_of(static_cast<size_t>(m), -1);
  for (Index i = 0; i < m; ++i)
    if (lp.row_relations[static_cast<size_t>(i)] != Relation::equal)
      slack_of[static_cast<size_t>(i)] = ncols++;

  Matrix A = Matrix::Zero(m, ncols);
  A.leftCols(n) = lp.constraint_matrix;
  for (Index i = 0; i < m; ++i) {
    if (slack_of[static_cast<size_t>(i)] < 0) continue;
    A(i, slack_of[static_cast<size_t>(i)]) =
        lp.row_relations[static_cast<size_t>(i)] == Relation::less_equal ? 1.0
                                                                         : -1.0;
  }

  const Real scale = 1.0 + lp.rhs.cwiseAbs().maxCoeff();
  BruteResult out;
  bool found = false;
  Real best = 0;

  std::vector<Index> pick(static_cast<size_t>(m));
  // Enumerate all m-subsets of columns.
  const auto evaluate = [&](const std::vector<Index>& cols) {
    Matrix B(m, m);
    for (Index i = 0; i < m; ++i) B.col(i) = A.col(cols[static_cast<size_t>(i)]);
    Eigen::FullPivLU<Matrix> lu(B);
    if (!lu.isInvertible()) return;
    Vector xb = lu.solve(lp.rhs);
    if ((B * xb - lp.rhs).cwiseAbs().maxCoeff() > 1e-7 * scale) return;
    if (xb.minCoeff() < -1e-7 * scale) return;
    Real obj = 0;
    for (Index i = 0; i < m; ++i) {
      const Index c = cols[static_cast<size_t>(i)];
      if (c < n) obj += lp.objective(c) * xb(i);
    }
    if (!found || (lp.sense == Sense::minimize ? obj < best : obj > best)) {
      best = obj;
      found = true;
    }
  };

  const std::function<void(Index, Index)> recurse = [&](Index start, Index depth) {
    if (depth == m) {
      evaluate(pick);
      return;
    }
    for (Index c = start; c <= ncols - (m - depth); ++c) {
      pick[static_cast<size_t>(depth)] = c;
      recurse(c + 1, depth + 1);
    }
  };
  if (m > 0 && ncols >= m) recurse(0, 0);

  if (found) {
    out.status = SolveStatus::optimal;
    out.objective = best;
  }
  return out;
}

}  // namespace dea::testing
