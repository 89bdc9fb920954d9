#include "dea/models.hpp"

#include <stdexcept>

namespace dea {

namespace {
void check_reference(const Dataset& ds, const IndexSet& reference) {
  if (reference.empty())
    throw std::invalid_argument("reference set must be non-empty");
  for (const Index j : reference)
    if (j < 0 || j >= ds.n())
      throw std::invalid_argument("reference index out of range");
}
}  // namespace

LinearProgram build_membership_lp(const Eigen::Ref<const Matrix>& generators,
                                  const Vector& point) {
  const Index k = generators.rows();
  const Index m = generators.cols();
  if (k < 1) throw std::invalid_argument("need at least one generator");
  if (point.size() != m)
    throw std::invalid_argument("point dimension mismatch");

  LinearProgram lp;
  lp.sense = Sense::minimize;
  lp.objective = Vector::Zero(k + 1);
  lp.objective(k) = 1.0;  // delta column
  lp.constraint_matrix.resize(m + 1, k + 1);
  lp.constraint_matrix.topLeftCorner(m, k) = generators.transpose();
  lp.constraint_matrix.topRightCorner(m, 1).setOnes();
  lp.constraint_matrix.bottomLeftCorner(1, k).setOnes();
  lp.constraint_matrix(m, k) = 0.0;
  lp.rhs.resize(m + 1);
  lp.rhs.head(m) = point;
  lp.rhs(m) = 1.0;
  lp.row_relations.assign(static_cast<size_t>(m), Relation::greater_equal);
  lp.row_relations.push_back(Relation::equal);
  return lp;
}

LinearProgram build_output_oriented_vrs(const Dataset& ds,
                                        const IndexSet& reference, Index target,
                                        bool deleted_domain) {
  check_reference(ds, reference);
  if (target < 0 || target >= ds.n())
    throw std::invalid_argument("target index out of range");
  const bool member = set_contains(reference, target);
  if (deleted_domain && member)
    throw std::invalid_argument(
        "deleted-domain evaluation requires target outside the reference set");
  if (!deleted_domain && !member)
    throw std::invalid_argument("target must belong to the reference set");

  const Index r = static_cast<Index>(reference.size());
  const Index m1 = ds.m1(), m2 = ds.m2();
  LinearProgram lp;
  lp.sense = Sense::maximize;
  lp.objective = Vector::Zero(r + 1);
  lp.objective(r) = 1.0;  // phi column
  lp.constraint_matrix = Matrix::Zero(m1 + m2 + 1, r + 1);
  lp.rhs.resize(m1 + m2 + 1);
  for (Index c = 0; c < r; ++c) {
    const Index j = reference[static_cast<size_t>(c)];
    lp.constraint_matrix.block(0, c, m1, 1) = ds.inputs().row(j).transpose();
    lp.constraint_matrix.block(m1, c, m2, 1) = ds.outputs().row(j).transpose();
    lp.constraint_matrix(m1 + m2, c) = 1.0;
  }
  lp.constraint_matrix.block(0, r, m1, 1).setZero();
  lp.constraint_matrix.block(m1, r, m2, 1) =
      -ds.outputs().row(target).transpose();
  lp.rhs.head(m1) = ds.inputs().row(target).transpose();
  lp.rhs.segment(m1, m2).setZero();
  lp.rhs(m1 + m2) = 1.0;
  lp.row_relations.assign(static_cast<size_t>(m1), Relation::less_equal);
  for (Index s = 0; s < m2; ++s)
    lp.row_relations.push_back(Relation::greater_equal);
  lp.row_relations.push_back(Relation::equal);
  return lp;
}

LinearProgram build_dominance_lp(const Dataset& ds, const IndexSet& reference,
                                 Index target) {
  check_reference(ds, reference);
  if (target < 0 || target >= ds.n())
    throw std::invalid_argument("target index out of range");

  const Index r = static_cast<Index>(reference.size());
  const Index m = ds.m();
  LinearProgram lp;
  lp.sense = Sense::maximize;
  lp.objective = Vector::Zero(r + 1);
  lp.objective(r) = 1.0;  // t column
  lp.constraint_matrix = Matrix::Zero(m + 1, r + 1);
  for (Index c = 0; c < r; ++c) {
    const Index j = reference[static_cast<size_t>(c)];
    lp.constraint_matrix.block(0, c, m, 1) = ds.translated().row(j).transpose();
    lp.constraint_matrix(m, c) = 1.0;
  }
  lp.constraint_matrix.block(0, r, m, 1).setConstant(-1.0);
  lp.rhs.resize(m + 1);
  lp.rhs.head(m) = ds.translated().row(target).transpose();
  lp.rhs(m) = 1.0;
  lp.row_relations.assign(static_cast<size_t>(m), Relation::greater_equal);
  lp.row_relations.push_back(Relation::equal);
  lp.variable_lower_bounds = Vector::Zero(r + 1);
  lp.variable_lower_bounds(r) = -kInfinity;  // t is free
  return lp;
}

}  // namespace dea
