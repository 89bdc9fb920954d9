#include "dea/dataset.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace dea {

namespace {
void require_positive(const Matrix& values, const char* what) {
  if (!values.allFinite() || (values.array() <= 0.0).any())
    throw std::domain_error(std::string(what) +
                            " must be strictly positive and finite");
}
}  // namespace

Vector translate_point(const Vector& inputs, const Vector& outputs) {
  require_positive(inputs, "inputs");
  require_positive(outputs, "outputs");
  Vector point(inputs.size() + outputs.size());
  point.head(inputs.size()) = -inputs;
  point.tail(outputs.size()) = outputs;
  return point;
}

Dataset::Dataset(std::string name, Matrix inputs, Matrix outputs)
    : name_(std::move(name)), inputs_(std::move(inputs)),
      outputs_(std::move(outputs)) {
  if (inputs_.rows() < 1)
    throw std::invalid_argument("dataset needs at least one DMU");
  if (inputs_.cols() < 1 || outputs_.cols() < 1)
    throw std::invalid_argument("dataset needs at least one input and output");
  if (outputs_.rows() != inputs_.rows())
    throw std::invalid_argument("input/output row count mismatch");
  require_positive(inputs_, "inputs");
  require_positive(outputs_, "outputs");
  translated_.resize(n(), m());
  translated_.leftCols(m1()) = -inputs_;
  translated_.rightCols(m2()) = outputs_;
}

}  // namespace dea
