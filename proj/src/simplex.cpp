#include "dea/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace dea {

namespace {

enum class PieceKind : uint8_t { shifted, mirrored, split, fixed };

struct VarPiece {
  PieceKind kind = PieceKind::shifted;
  Index col0 = -1;
  Index col1 = -1;  // negative part of a split
  Real anchor = 0;  // shift (shifted/fixed) or mirror point (mirrored)
};

// Internal minimization problem over nonnegative columns:
//   min cost'x  s.t.  A x = b,  x >= 0
// plus bookkeeping to map primal/dual values back to the caller's space.
struct Standardized {
  Matrix A;
  Vector b;
  Vector cost;
  Real offset = 0;
  bool maximize = false;
  Index nrows = 0;
  Index ncols = 0;
  std::vector<VarPiece> pieces;
  std::vector<Index> row_orig;   // original row id, -1 for synthetic rows
  std::vector<Real> row_sign;    // reported dual = row_sign * internal dual
  std::vector<uint8_t> is_artificial;
};

struct PieceLayout {
  std::vector<VarPiece> pieces;
  Index num_cols = 0;
  std::vector<Index> bound_rows;  // original vars needing x' <= u-l rows
};

PieceLayout layout_pieces(const LinearProgram& lp) {
  PieceLayout out;
  out.pieces.resize(static_cast<size_t>(lp.num_vars()));
  for (Index j = 0; j < lp.num_vars(); ++j) {
    const Real l = lp.lower(j);
    const Real u = lp.upper(j);
    VarPiece& p = out.pieces[static_cast<size_t>(j)];
    if (l == u) {
      p.kind = PieceKind::fixed;
      p.anchor = l;
    } else if (std::isfinite(l)) {
      p.kind = PieceKind::shifted;
      p.anchor = l;
      p.col0 = out.num_cols++;
      if (std::isfinite(u)) out.bound_rows.push_back(j);
    } else if (std::isfinite(u)) {
      p.kind = PieceKind::mirrored;
      p.anchor = u;
      p.col0 = out.num_cols++;
    } else {
      p.kind = PieceKind::split;
      p.col0 = out.num_cols++;
      p.col1 = out.num_cols++;
    }
  }
  return out;
}

// Dense row of the standardized matrix for original row i, plus the constant
// absorbed into the rhs by the variable transforms.
void expand_row(const LinearProgram& lp, const PieceLayout& layout, Index i,
                Eigen::RowVectorXd& out, Real& rhs_shift) {
  out.setZero();
  rhs_shift = 0;
  for (Index j = 0; j < lp.num_vars(); ++j) {
    const Real a = lp.constraint_matrix(i, j);
    if (a == 0) continue;
    const VarPiece& p = layout.pieces[static_cast<size_t>(j)];
    switch (p.kind) {
      case PieceKind::shifted:
        out(p.col0) += a;
        rhs_shift += a * p.anchor;
        break;
      case PieceKind::mirrored:
        out(p.col0) -= a;
        rhs_shift += a * p.anchor;
        break;
      case PieceKind::split:
        out(p.col0) += a;
        out(p.col1) -= a;
        break;
      case PieceKind::fixed:
        rhs_shift += a * p.anchor;
        break;
    }
  }
}

void expand_cost(const LinearProgram& lp, const PieceLayout& layout,
                 Vector& cost, Real& offset) {
  for (Index j = 0; j < lp.num_vars(); ++j) {
    Real c = lp.objective(j);
    if (lp.sense == Sense::maximize) c = -c;
    const VarPiece& p = layout.pieces[static_cast<size_t>(j)];
    switch (p.kind) {
      case PieceKind::shifted:
        cost(p.col0) += c;
        offset += c * p.anchor;
        break;
      case PieceKind::mirrored:
        cost(p.col0) -= c;
        offset += c * p.anchor;
        break;
      case PieceKind::split:
        cost(p.col0) += c;
        cost(p.col1) -= c;
        break;
      case PieceKind::fixed:
        offset += c * p.anchor;
        break;
    }
  }
}

// Primal standardization: slack per inequality, rows normalized to b >= 0,
// artificial columns where no +1 logical column survives. Initial basis is
// returned in `basis`.
Standardized standardize_primal(const LinearProgram& lp,
                                std::vector<Index>& basis) {
  PieceLayout layout = layout_pieces(lp);
  const Index m0 = lp.num_rows();
  const Index nbound = static_cast<Index>(layout.bound_rows.size());
  const Index nrows = m0 + nbound;

  Standardized sf;
  sf.maximize = lp.sense == Sense::maximize;
  sf.pieces = layout.pieces;
  sf.nrows = nrows;
  sf.row_orig.assign(static_cast<size_t>(nrows), -1);
  sf.row_sign.assign(static_cast<size_t>(nrows), 1.0);

  Matrix rows(nrows, layout.num_cols);
  Vector rhs(nrows);
  std::vector<Relation> rel(static_cast<size_t>(nrows));
  Eigen::RowVectorXd rowbuf(layout.num_cols);
  for (Index i = 0; i < m0; ++i) {
    Real shift = 0;
    expand_row(lp, layout, i, rowbuf, shift);
    rows.row(i) = rowbuf;
    rhs(i) = lp.rhs(i) - shift;
    rel[static_cast<size_t>(i)] = lp.row_relations[static_cast<size_t>(i)];
    sf.row_orig[static_cast<size_t>(i)] = i;
  }
  for (Index k = 0; k < nbound; ++k) {
    const Index j = layout.bound_rows[static_cast<size_t>(k)];
    const VarPiece& p = layout.pieces[static_cast<size_t>(j)];
    rows.row(m0 + k).setZero();
    rows(m0 + k, p.col0) = 1.0;
    rhs(m0 + k) = lp.upper(j) - lp.lower(j);
    rel[static_cast<size_t>(m0 + k)] = Relation::less_equal;
  }

  // Row equilibration: pivot and feasibility tolerances are meaningful only
  // when coefficients sit near unit scale.
  for (Index i = 0; i < nrows; ++i) {
    const Real magnitude = rows.row(i).cwiseAbs().maxCoeff();
    if (magnitude > 1e-12) {
      const Real k = 1.0 / magnitude;
      rows.row(i) *= k;
      rhs(i) *= k;
      sf.row_sign[static_cast<size_t>(i)] = k;
    }
  }

  // Slack layout: one per inequality row.
  std::vector<Index> slack_col(static_cast<size_t>(nrows), -1);
  Index ncols = layout.num_cols;
  for (Index i = 0; i < nrows; ++i)
    if (rel[static_cast<size_t>(i)] != Relation::equal)
      slack_col[static_cast<size_t>(i)] = ncols++;

  std::vector<Real> slack_sign(static_cast<size_t>(nrows), 0.0);
  std::vector<uint8_t> need_artificial(static_cast<size_t>(nrows), 0);
  for (Index i = 0; i < nrows; ++i) {
    Real sgn = rel[static_cast<size_t>(i)] == Relation::less_equal ? 1.0
               : rel[static_cast<size_t>(i)] == Relation::greater_equal ? -1.0
                                                                        : 0.0;
    if (rhs(i) < 0) {
      rows.row(i) = -rows.row(i);
      rhs(i) = -rhs(i);
      sgn = -sgn;
      sf.row_sign[static_cast<size_t>(i)] *= -1.0;
    }
    slack_sign[static_cast<size_t>(i)] = sgn;
    need_artificial[static_cast<size_t>(i)] = sgn != 1.0;
  }
  const Index first_artificial = ncols;
  for (Index i = 0; i < nrows; ++i)
    if (need_artificial[static_cast<size_t>(i)]) ++ncols;

  sf.A = Matrix::Zero(nrows, ncols);
  sf.A.leftCols(layout.num_cols) = rows;
  sf.b = rhs;
  sf.cost = Vector::Zero(ncols);
  sf.offset = 0;
  expand_cost(lp, layout, sf.cost, sf.offset);
  sf.ncols = ncols;
  sf.is_artificial.assign(static_cast<size_t>(ncols), 0);

  basis.assign(static_cast<size_t>(nrows), -1);
  Index art = first_artificial;
  for (Index i = 0; i < nrows; ++i) {
    const Index sc = slack_col[static_cast<size_t>(i)];
    if (sc >= 0) sf.A(i, sc) = slack_sign[static_cast<size_t>(i)];
    if (need_artificial[static_cast<size_t>(i)]) {
      sf.A(i, art) = 1.0;
      sf.is_artificial[static_cast<size_t>(art)] = 1;
      basis[static_cast<size_t>(i)] = art++;
    } else {
      basis[static_cast<size_t>(i)] = sc;
    }
  }
  return sf;
}

// Reduced form of an LP after the variable transforms: min sense, x >= 0,
// original row relations kept. Used to build the explicit dual.
struct ReducedForm {
  Matrix A;  // rows: original rows then upper-bound rows
  Vector b;
  Vector cost;
  std::vector<Relation> relations;
  Real offset = 0;
  bool maximize = false;
  Index num_orig_rows = 0;
  std::vector<VarPiece> pieces;
};

ReducedForm reduce(const LinearProgram& lp) {
  PieceLayout layout = layout_pieces(lp);
  const Index m0 = lp.num_rows();
  const Index nbound = static_cast<Index>(layout.bound_rows.size());

  ReducedForm rf;
  rf.maximize = lp.sense == Sense::maximize;
  rf.pieces = layout.pieces;
  rf.num_orig_rows = m0;
  rf.A = Matrix::Zero(m0 + nbound, layout.num_cols);
  rf.b.resize(m0 + nbound);
  rf.relations.resize(static_cast<size_t>(m0 + nbound));
  Eigen::RowVectorXd rowbuf(layout.num_cols);
  for (Index i = 0; i < m0; ++i) {
    Real shift = 0;
    expand_row(lp, layout, i, rowbuf, shift);
    rf.A.row(i) = rowbuf;
    rf.b(i) = lp.rhs(i) - shift;
    rf.relations[static_cast<size_t>(i)] = lp.row_relations[static_cast<size_t>(i)];
  }
  for (Index k = 0; k < nbound; ++k) {
    const Index j = layout.bound_rows[static_cast<size_t>(k)];
    const VarPiece& p = layout.pieces[static_cast<size_t>(j)];
    rf.A(m0 + k, p.col0) = 1.0;
    rf.b(m0 + k) = lp.upper(j) - lp.lower(j);
    rf.relations[static_cast<size_t>(m0 + k)] = Relation::less_equal;
  }
  rf.cost = Vector::Zero(layout.num_cols);
  expand_cost(lp, layout, rf.cost, rf.offset);
  return rf;
}

// Explicit dual of the reduced form (min c'x, Ax ~ b, x >= 0):
//   max b'y  s.t.  A'y <= c,  y <= 0 on <= rows, y >= 0 on >= rows, free on =.
LinearProgram build_reduced_dual(const ReducedForm& rf) {
  const Index m = rf.b.size();
  const Index n = rf.cost.size();
  LinearProgram dual;
  dual.sense = Sense::maximize;
  dual.objective = rf.b;
  dual.constraint_matrix = rf.A.transpose();
  dual.rhs = rf.cost;
  dual.row_relations.assign(static_cast<size_t>(n), Relation::less_equal);
  dual.variable_lower_bounds.resize(m);
  dual.variable_upper_bounds.resize(m);
  for (Index i = 0; i < m; ++i) {
    switch (rf.relations[static_cast<size_t>(i)]) {
      case Relation::less_equal:
        dual.variable_lower_bounds(i) = -kInfinity;
        dual.variable_upper_bounds(i) = 0.0;
        break;
      case Relation::greater_equal:
        dual.variable_lower_bounds(i) = 0.0;
        dual.variable_upper_bounds(i) = kInfinity;
        break;
      case Relation::equal:
        dual.variable_lower_bounds(i) = -kInfinity;
        dual.variable_upper_bounds(i) = kInfinity;
        break;
    }
  }
  return dual;
}

class SimplexCore {
 public:
  SimplexCore(Standardized sf, const SolverOptions& opt)
      : sf_(std::move(sf)), opt_(opt) {
    scale_b_ = 1.0 + (sf_.b.size() ? sf_.b.cwiseAbs().maxCoeff() : 0.0);
    scale_c_ = 1.0 + (sf_.cost.size() ? sf_.cost.cwiseAbs().maxCoeff() : 0.0);
    entering_tol_ = 1e-9 * scale_c_;
    bland_ = opt.pricing == PricingRule::bland;
  }

  void set_basis(const std::vector<Index>& basis) {
    basis_ = basis;
    in_basis_.assign(static_cast<size_t>(sf_.ncols), 0);
    for (const Index j : basis_) in_basis_[static_cast<size_t>(j)] = 1;
    factorize();
    compute_xB();
  }

  const std::vector<Index>& basis() const { return basis_; }
  long iterations() const { return iterations_; }
  bool used_bland() const { return bland_used_; }
  const Standardized& form() const { return sf_; }

  // min sum of artificials; returns attained infeasibility.
  Real run_phase1() {
    Vector cost1 = Vector::Zero(sf_.ncols);
    for (Index j = 0; j < sf_.ncols; ++j)
      if (sf_.is_artificial[static_cast<size_t>(j)]) cost1(j) = 1.0;
    const SolveStatus st = primal_loop(cost1, true);
    if (st != SolveStatus::optimal)
      throw NumericalInstabilityError("phase 1 reported an unbounded subproblem");
    Real infeas = 0;
    for (Index i = 0; i < sf_.nrows; ++i)
      if (sf_.is_artificial[static_cast<size_t>(basis_[static_cast<size_t>(i)])])
        infeas += std::max(Real(0), xB_(i));
    return infeas;
  }

  // Pivot or delete rows until no artificial column remains basic.
  void eliminate_artificials() {
    for (Index i = 0; i < sf_.nrows;) {
      const Index bj = basis_[static_cast<size_t>(i)];
      if (!sf_.is_artificial[static_cast<size_t>(bj)]) {
        ++i;
        continue;
      }
      const Eigen::RowVectorXd alpha = Binv_.row(i) * sf_.A;
      Index q = -1;
      for (Index j = 0; j < sf_.ncols; ++j) {
        if (in_basis_[static_cast<size_t>(j)] ||
            sf_.is_artificial[static_cast<size_t>(j)])
          continue;
        if (std::abs(alpha(j)) > 1e-7) {
          q = j;
          break;
        }
      }
      if (q >= 0) {
        Vector w = Binv_ * sf_.A.col(q);
        pivot(i, q, w);
        ++i;
      } else {
        drop_row(i);  // linearly dependent constraint
      }
    }
  }

  SolveStatus run_phase2() { return primal_loop(sf_.cost, false); }

  // Solution assembly in internal space.
  Vector primal_internal() const {
    Vector x = Vector::Zero(sf_.ncols);
    for (Index i = 0; i < sf_.nrows; ++i)
      x(basis_[static_cast<size_t>(i)]) = xB_(i);
    return x;
  }

  Vector dual_internal() const {
    Vector cB(sf_.nrows);
    for (Index i = 0; i < sf_.nrows; ++i)
      cB(i) = sf_.cost(basis_[static_cast<size_t>(i)]);
    return Binv_.transpose() * cB;
  }

  // Scale-normalized optimality verification in the internal space.
  bool verify_optimal(const Tolerances& tol, std::string* why = nullptr) {
    const auto fail = [&](const char* what, Real got, Real bound) {
      if (why) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%s (%.3e vs %.3e)", what, got, bound);
        *why = buf;
      }
      return false;
    };
    factorize();
    compute_xB();
    const Vector x = primal_internal();
    const Vector y = dual_internal();
    const Vector resid = sf_.A * x - sf_.b;
    for (Index i = 0; i < sf_.nrows; ++i)
      if (std::abs(resid(i)) > tol.feas * (1.0 + std::abs(sf_.b(i))))
        return fail("row residual", std::abs(resid(i)),
                    tol.feas * (1.0 + std::abs(sf_.b(i))));
    for (Index i = 0; i < sf_.nrows; ++i)
      if (xB_(i) < -tol.feas * (1.0 + std::abs(sf_.b(i))))
        return fail("basic value negative", xB_(i),
                    -tol.feas * (1.0 + std::abs(sf_.b(i))));
    const Vector d = sf_.cost - sf_.A.transpose() * y;
    for (Index j = 0; j < sf_.ncols; ++j) {
      if (in_basis_[static_cast<size_t>(j)] ||
          sf_.is_artificial[static_cast<size_t>(j)])
        continue;
      if (d(j) < -tol.feas * scale_c_ * 10)
        return fail("reduced cost negative", d(j), -tol.feas * scale_c_ * 10);
    }
    const Real primal_obj = sf_.cost.dot(x);
    const Real dual_obj = y.dot(sf_.b);
    if (std::abs(primal_obj - dual_obj) >
        tol.gap * (1.0 + std::abs(primal_obj) + std::abs(dual_obj)))
      return fail("duality gap", std::abs(primal_obj - dual_obj),
                  tol.gap * (1.0 + std::abs(primal_obj) + std::abs(dual_obj)));
    return true;
  }

 private:
  SolveStatus primal_loop(const Vector& cost, bool phase1) {
    Vector cB(sf_.nrows), y, d, w;
    for (;;) {
      if (iterations_ >= opt_.max_iterations)
        throw IterationLimitError("simplex iteration limit reached");
      for (Index i = 0; i < sf_.nrows; ++i)
        cB(i) = cost(basis_[static_cast<size_t>(i)]);
      y.noalias() = Binv_.transpose() * cB;
      d = cost;
      d.noalias() -= sf_.A.transpose() * y;

      Index q = -1;
      Real best = -entering_tol_;
      for (Index j = 0; j < sf_.ncols; ++j) {
        if (in_basis_[static_cast<size_t>(j)]) continue;
        if (sf_.is_artificial[static_cast<size_t>(j)]) continue;
        if (d(j) < best) {
          best = d(j);
          q = j;
          if (bland_) break;  // first eligible index
        }
      }
      if (q < 0) return SolveStatus::optimal;

      w.noalias() = Binv_ * sf_.A.col(q);
      Index r = -1;
      Real theta = 0;
      Real wr = 0;
      bool tiny_candidates = false;
      for (Index i = 0; i < sf_.nrows; ++i) {
        if (w(i) > opt_.tol.pivot) {
          const Real t = std::max(Real(0), xB_(i)) / w(i);
          if (r < 0 || t < theta - 1e-12 * (1.0 + theta)) {
            theta = t;
            r = i;
            wr = w(i);
          } else if (t <= theta + 1e-12 * (1.0 + theta)) {
            const bool take = bland_ ? basis_[static_cast<size_t>(i)] <
                                           basis_[static_cast<size_t>(r)]
                                     : w(i) > wr;
            if (take) {
              r = i;
              wr = w(i);
              theta = std::min(theta, t);
            }
          }
        } else if (w(i) > 0) {
          tiny_candidates = true;
        }
      }
      if (r < 0) {
        if (tiny_candidates) {
          handle_tiny_pivot();
          continue;
        }
        if (phase1)
          throw NumericalInstabilityError("phase 1 direction unbounded");
        return SolveStatus::unbounded;
      }
      tiny_pivot_retries_ = 0;
      track_stall(theta);
      pivot(r, q, w);
      ++iterations_;
    }
  }

  void track_stall(Real progress) {
    if (progress <= 1e-12 * scale_b_) {
      if (++stall_ > opt_.stall_limit && !bland_) {
        bland_ = true;
        bland_used_ = true;
      }
    } else {
      stall_ = 0;
    }
  }

  void handle_tiny_pivot() {
    // All candidate pivots sit below the pivot tolerance: refactorize once,
    // then give up as numerically unstable.
    if (++tiny_pivot_retries_ > 1)
      throw NumericalInstabilityError(
          "pivot candidates below pivot tolerance after refactorization");
    factorize();
    compute_xB();
  }

  void pivot(Index r, Index q, const Vector& w) {
    const Index leaving = basis_[static_cast<size_t>(r)];
    in_basis_[static_cast<size_t>(leaving)] = 0;
    in_basis_[static_cast<size_t>(q)] = 1;
    basis_[static_cast<size_t>(r)] = q;
    const Real piv = w(r);
    Binv_.row(r) /= piv;
    for (Index i = 0; i < sf_.nrows; ++i)
      if (i != r && w(i) != 0) Binv_.row(i) -= w(i) * Binv_.row(r);
    if (++pivots_since_refactor_ >= 64) {
      factorize();
    }
    compute_xB();
  }

  void drop_row(Index r) {
    const Index nrows = sf_.nrows;
    Matrix A(nrows - 1, sf_.ncols);
    Vector b(nrows - 1);
    std::vector<Index> row_orig;
    std::vector<Real> row_sign;
    Index out = 0;
    for (Index i = 0; i < nrows; ++i) {
      if (i == r) continue;
      A.row(out) = sf_.A.row(i);
      b(out) = sf_.b(i);
      row_orig.push_back(sf_.row_orig[static_cast<size_t>(i)]);
      row_sign.push_back(sf_.row_sign[static_cast<size_t>(i)]);
      ++out;
    }
    in_basis_[static_cast<size_t>(basis_[static_cast<size_t>(r)])] = 0;
    basis_.erase(basis_.begin() + r);
    sf_.A = std::move(A);
    sf_.b = std::move(b);
    sf_.row_orig = std::move(row_orig);
    sf_.row_sign = std::move(row_sign);
    sf_.nrows = nrows - 1;
    factorize();
    compute_xB();
  }

  void factorize() {
    Matrix B(sf_.nrows, sf_.nrows);
    for (Index i = 0; i < sf_.nrows; ++i)
      B.col(i) = sf_.A.col(basis_[static_cast<size_t>(i)]);
    Eigen::FullPivLU<Matrix> lu(B);
    if (!lu.isInvertible())
      throw NumericalInstabilityError("singular basis matrix");
    Binv_ = lu.inverse();
    pivots_since_refactor_ = 0;
  }

  void compute_xB() { xB_.noalias() = Binv_ * sf_.b; }

  Standardized sf_;
  const SolverOptions& opt_;
  std::vector<Index> basis_;
  std::vector<uint8_t> in_basis_;
  Matrix Binv_;
  Vector xB_;
  Real scale_b_ = 1;
  Real scale_c_ = 1;
  Real entering_tol_ = 1e-9;
  long iterations_ = 0;
  long stall_ = 0;
  long pivots_since_refactor_ = 0;
  int tiny_pivot_retries_ = 0;
  bool bland_ = false;
  bool bland_used_ = false;

  friend LpSolution assemble(const LinearProgram&, SimplexCore&, SolveStatus,
                             const SolverOptions&);
};

LpSolution assemble(const LinearProgram& lp, SimplexCore& core,
                    SolveStatus status, const SolverOptions& opt) {
  LpSolution sol;
  sol.status = status;
  sol.iterations = core.iterations();
  sol.algorithm = opt.algorithm;
  sol.used_bland_fallback = core.used_bland();
  if (status == SolveStatus::infeasible) {
    sol.objective_value = std::numeric_limits<Real>::quiet_NaN();
    return sol;
  }
  if (status == SolveStatus::unbounded) {
    sol.objective_value = lp.sense == Sense::minimize
                              ? -std::numeric_limits<Real>::infinity()
                              : std::numeric_limits<Real>::infinity();
    return sol;
  }
  const Standardized& sf = core.form();
  const Vector x_int = core.primal_internal();
  const Vector y_int = core.dual_internal();

  sol.primal.resize(lp.num_vars());
  for (Index j = 0; j < lp.num_vars(); ++j) {
    const VarPiece& p = sf.pieces[static_cast<size_t>(j)];
    switch (p.kind) {
      case PieceKind::shifted: sol.primal(j) = p.anchor + x_int(p.col0); break;
      case PieceKind::mirrored: sol.primal(j) = p.anchor - x_int(p.col0); break;
      case PieceKind::split: sol.primal(j) = x_int(p.col0) - x_int(p.col1); break;
      case PieceKind::fixed: sol.primal(j) = p.anchor; break;
    }
  }
  sol.dual = Vector::Zero(lp.num_rows());
  for (Index i = 0; i < sf.nrows; ++i) {
    const Index orig = sf.row_orig[static_cast<size_t>(i)];
    if (orig >= 0)
      sol.dual(orig) += sf.row_sign[static_cast<size_t>(i)] * y_int(i);
  }
  Real obj = sf.cost.dot(x_int) + sf.offset;
  if (sf.maximize) {
    obj = -obj;
    sol.dual = -sol.dual;
  }
  sol.objective_value = obj;

  if (opt.basis_out) {
    opt.basis_out->algorithm = opt.algorithm;
    opt.basis_out->num_vars = lp.num_vars();
    opt.basis_out->num_rows = lp.num_rows();
    opt.basis_out->basic_columns = core.basis();
  }
  return sol;
}

// No-constraint LPs reduce to bound inspection.
LpSolution solve_unconstrained(const LinearProgram& lp) {
  LpSolution sol;
  sol.algorithm = Algorithm::primal_simplex;
  sol.primal.resize(lp.num_vars());
  sol.dual.resize(0);
  Real obj = 0;
  for (Index j = 0; j < lp.num_vars(); ++j) {
    Real c = lp.objective(j);
    if (lp.sense == Sense::maximize) c = -c;
    const Real l = lp.lower(j), u = lp.upper(j);
    Real v;
    if (c > 0) {
      v = l;
    } else if (c < 0) {
      v = u;
    } else {
      v = std::isfinite(l) ? l : (std::isfinite(u) ? u : 0.0);
    }
    if (!std::isfinite(v)) {
      sol.status = SolveStatus::unbounded;
      sol.objective_value = lp.sense == Sense::minimize
                                ? -std::numeric_limits<Real>::infinity()
                                : std::numeric_limits<Real>::infinity();
      return sol;
    }
    sol.primal(j) = v;
    obj += c * v;
  }
  sol.status = SolveStatus::optimal;
  sol.objective_value = lp.sense == Sense::maximize ? -obj : obj;
  return sol;
}

bool warm_start_applicable(const LinearProgram& lp, const SolverOptions& opt,
                           Index ncols, Index nrows) {
  const Basis* ws = opt.warm_start;
  if (!ws) return false;
  if (ws->algorithm != opt.algorithm) return false;
  if (ws->num_vars != lp.num_vars() || ws->num_rows != lp.num_rows())
    return false;
  if (static_cast<Index>(ws->basic_columns.size()) != nrows) return false;
  std::vector<uint8_t> seen(static_cast<size_t>(ncols), 0);
  for (const Index j : ws->basic_columns) {
    if (j < 0 || j >= ncols) return false;
    if (seen[static_cast<size_t>(j)]) return false;
    seen[static_cast<size_t>(j)] = 1;
  }
  return true;
}

}  // namespace

void LinearProgram::validate() const {
  const Index n = num_vars();
  const Index m = num_rows();
  if (n < 1) throw std::invalid_argument("LP must have at least one variable");
  if (constraint_matrix.rows() != m || (m > 0 && constraint_matrix.cols() != n))
    throw std::invalid_argument("constraint matrix shape mismatch");
  if (static_cast<Index>(row_relations.size()) != m)
    throw std::invalid_argument("row relation count mismatch");
  if (variable_lower_bounds.size() != 0 && variable_lower_bounds.size() != n)
    throw std::invalid_argument("lower bound count mismatch");
  if (variable_upper_bounds.size() != 0 && variable_upper_bounds.size() != n)
    throw std::invalid_argument("upper bound count mismatch");
  if (!objective.allFinite())
    throw std::invalid_argument("objective has non-finite coefficients");
  if (m > 0 && !constraint_matrix.allFinite())
    throw std::invalid_argument("constraint matrix has non-finite coefficients");
  if (m > 0 && !rhs.allFinite())
    throw std::invalid_argument("rhs has non-finite coefficients");
  for (Index j = 0; j < n; ++j) {
    const Real l = lower(j), u = upper(j);
    if (std::isnan(l) || std::isnan(u) || l == kInfinity || u == -kInfinity)
      throw std::invalid_argument("invalid variable bounds");
    if (l > u) throw std::invalid_argument("crossed variable bounds");
  }
}

LpSolution solve(const LinearProgram& lp, const SolverOptions& options) {
  lp.validate();
  if (lp.num_rows() == 0) return solve_unconstrained(lp);

  if (options.algorithm == Algorithm::primal_simplex) {
    std::vector<Index> basis;
    Standardized sf = standardize_primal(lp, basis);
    SimplexCore core(std::move(sf), options);

    bool warm = false;
    if (warm_start_applicable(lp, options, core.form().ncols,
                              core.form().nrows)) {
      try {
        core.set_basis(options.warm_start->basic_columns);
        Vector xB = core.primal_internal();
        warm = xB.minCoeff() > -options.tol.feas *
                                   (1.0 + core.form().b.cwiseAbs().maxCoeff());
        bool has_artificial = false;
        for (const Index j : options.warm_start->basic_columns)
          if (core.form().is_artificial[static_cast<size_t>(j)])
            has_artificial = true;
        warm = warm && !has_artificial;
      } catch (const NumericalInstabilityError&) {
        warm = false;
      }
    }
    if (!warm) core.set_basis(basis);

    bool has_artificial = false;
    for (const auto flag : core.form().is_artificial)
      if (flag) has_artificial = true;
    if (!warm && has_artificial) {
      const Real infeas = core.run_phase1();
      if (infeas > options.tol.feas *
                       (1.0 + core.form().b.cwiseAbs().maxCoeff()))
        return assemble(lp, core, SolveStatus::infeasible, options);
      core.eliminate_artificials();
    }
    SolveStatus status = core.run_phase2();
    if (status == SolveStatus::optimal) {
      std::string why;
      for (int attempt = 0;
           attempt < 2 && !core.verify_optimal(options.tol, &why); ++attempt) {
        status = core.run_phase2();
        if (attempt == 1 && !core.verify_optimal(options.tol, &why))
          throw NumericalInstabilityError(
              "optimal basis failed residual verification: " + why);
      }
    }
    return assemble(lp, core, status, options);
  }

  // Dual simplex: run the primal method on the explicitly built dual of the
  // reduced form and map the optimal pair back. Statuses map as
  // dual-unbounded -> infeasible; a dual-infeasible outcome (original
  // unbounded or infeasible) is resolved by one primal solve.
  const ReducedForm rf = reduce(lp);
  const LinearProgram dual_lp = build_reduced_dual(rf);

  SolverOptions inner = options;
  inner.algorithm = Algorithm::primal_simplex;
  Basis warm_copy;
  if (options.warm_start &&
      options.warm_start->algorithm == Algorithm::dual_simplex) {
    warm_copy = *options.warm_start;
    warm_copy.algorithm = Algorithm::primal_simplex;
    inner.warm_start = &warm_copy;
  } else {
    inner.warm_start = nullptr;
  }
  Basis inner_basis;
  inner.basis_out = options.basis_out ? &inner_basis : nullptr;

  const LpSolution ds = solve(dual_lp, inner);
  if (ds.status == SolveStatus::infeasible) {
    SolverOptions probe = options;
    probe.algorithm = Algorithm::primal_simplex;
    probe.warm_start = nullptr;
    probe.basis_out = nullptr;
    LpSolution resolved = solve(lp, probe);
    resolved.algorithm = Algorithm::dual_simplex;
    resolved.iterations += ds.iterations;
    return resolved;
  }

  LpSolution sol;
  sol.algorithm = Algorithm::dual_simplex;
  sol.iterations = ds.iterations;
  sol.used_bland_fallback = ds.used_bland_fallback;
  if (ds.status == SolveStatus::unbounded) {
    sol.status = SolveStatus::infeasible;
    sol.objective_value = std::numeric_limits<Real>::quiet_NaN();
    return sol;
  }

  sol.status = SolveStatus::optimal;
  const Vector& x_reduced = ds.dual;    // duals of A'y <= c are the primal x
  const Vector& y_reduced = ds.primal;  // dual-problem variables are the duals
  sol.primal.resize(lp.num_vars());
  for (Index j = 0; j < lp.num_vars(); ++j) {
    const VarPiece& p = rf.pieces[static_cast<size_t>(j)];
    switch (p.kind) {
      case PieceKind::shifted: sol.primal(j) = p.anchor + x_reduced(p.col0); break;
      case PieceKind::mirrored: sol.primal(j) = p.anchor - x_reduced(p.col0); break;
      case PieceKind::split:
        sol.primal(j) = x_reduced(p.col0) - x_reduced(p.col1);
        break;
      case PieceKind::fixed: sol.primal(j) = p.anchor; break;
    }
  }
  sol.dual = y_reduced.head(rf.num_orig_rows);
  Real obj = ds.objective_value + rf.offset;
  if (rf.maximize) {
    obj = -obj;
    sol.dual = -sol.dual;
  }
  sol.objective_value = obj;

  if (options.basis_out) {
    *options.basis_out = inner_basis;
    options.basis_out->algorithm = Algorithm::dual_simplex;
  }
  return sol;
}

bool check_solution(const LinearProgram& lp, const LpSolution& sol,
                    const Tolerances& tol, std::string* why) {
  const auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (sol.status != SolveStatus::optimal) return fail("status not optimal");
  if (sol.primal.size() != lp.num_vars()) return fail("primal size mismatch");
  if (sol.dual.size() != lp.num_rows()) return fail("dual size mismatch");

  // Primal feasibility.
  for (Index j = 0; j < lp.num_vars(); ++j) {
    const Real v = sol.primal(j);
    if (v < lp.lower(j) - tol.feas * (1.0 + std::abs(lp.lower(j))))
      return fail("lower bound violated");
    if (v > lp.upper(j) + tol.feas * (1.0 + std::abs(lp.upper(j))))
      return fail("upper bound violated");
  }
  const Vector row_vals = lp.constraint_matrix * sol.primal;
  for (Index i = 0; i < lp.num_rows(); ++i) {
    const Real scale = 1.0 + std::abs(lp.rhs(i)) + std::abs(row_vals(i));
    const Real viol = row_vals(i) - lp.rhs(i);
    switch (lp.row_relations[static_cast<size_t>(i)]) {
      case Relation::less_equal:
        if (viol > tol.feas * scale) return fail("<= row violated");
        break;
      case Relation::greater_equal:
        if (viol < -tol.feas * scale) return fail(">= row violated");
        break;
      case Relation::equal:
        if (std::abs(viol) > tol.feas * scale) return fail("= row violated");
        break;
    }
  }

  // Dual sign conventions and dual feasibility (reduced costs respect
  // variable bound states).
  const Real sense_sign = lp.sense == Sense::minimize ? 1.0 : -1.0;
  for (Index i = 0; i < lp.num_rows(); ++i) {
    const Real y = sol.dual(i) * sense_sign;
    const Real s = tol.feas * (1.0 + std::abs(sol.dual(i)));
    switch (lp.row_relations[static_cast<size_t>(i)]) {
      case Relation::less_equal:
        if (y > s) return fail("dual sign on <= row");
        break;
      case Relation::greater_equal:
        if (y < -s) return fail("dual sign on >= row");
        break;
      case Relation::equal:
        break;
    }
  }
  const Vector rc = lp.objective - lp.constraint_matrix.transpose() * sol.dual;
  for (Index j = 0; j < lp.num_vars(); ++j) {
    const Real scale =
        tol.feas * 10 * (1.0 + std::abs(lp.objective(j)) + std::abs(rc(j)));
    const Real r = rc(j) * sense_sign;
    const bool at_lower =
        std::isfinite(lp.lower(j)) &&
        sol.primal(j) <= lp.lower(j) + tol.feas * (1.0 + std::abs(lp.lower(j)));
    const bool at_upper =
        std::isfinite(lp.upper(j)) &&
        sol.primal(j) >= lp.upper(j) - tol.feas * (1.0 + std::abs(lp.upper(j)));
    if (at_lower && at_upper) continue;  // fixed
    if (at_lower) {
      if (r < -scale) return fail("reduced cost sign at lower bound");
    } else if (at_upper) {
      if (r > scale) return fail("reduced cost sign at upper bound");
    } else {
      if (std::abs(r) > scale) return fail("nonzero reduced cost on free value");
    }
  }

  // Objective consistency and duality gap via the Lagrangian value.
  const Real cx = lp.objective.dot(sol.primal);
  if (std::abs(cx - sol.objective_value) >
      tol.gap * (1.0 + std::abs(cx) + std::abs(sol.objective_value)))
    return fail("objective value mismatch");
  Real dual_obj = sol.dual.dot(lp.rhs);
  for (Index j = 0; j < lp.num_vars(); ++j) {
    const Real r = rc(j);
    if (std::isfinite(lp.lower(j)) && r * sense_sign > 0)
      dual_obj += r * lp.lower(j);
    else if (std::isfinite(lp.upper(j)) && r * sense_sign < 0)
      dual_obj += r * lp.upper(j);
  }
  if (std::abs(dual_obj - sol.objective_value) >
      tol.gap * (1.0 + std::abs(dual_obj) + std::abs(sol.objective_value)))
    return fail("duality gap");
  return true;
}

}  // namespace dea
