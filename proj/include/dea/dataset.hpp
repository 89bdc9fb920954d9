#pragma once

#include "dea/types.hpp"

#include <string>

namespace dea {

/// Hull coordinates of one DMU: inputs negated, outputs kept, concatenated.
/// Throws std::domain_error on non-positive or non-finite components.
Vector translate_point(const Vector& inputs, const Vector& outputs);

/// A DEA data set: n DMUs, each with m1 strictly positive inputs and m2
/// strictly positive outputs. Row i of translated() is (-X_i, Y_i).
class Dataset {
 public:
  Dataset(std::string name, Matrix inputs, Matrix outputs);

  const std::string& name() const { return name_; }
  Index n() const { return inputs_.rows(); }
  Index m1() const { return inputs_.cols(); }
  Index m2() const { return outputs_.cols(); }
  Index m() const { return m1() + m2(); }
  const Matrix& inputs() const { return inputs_; }
  const Matrix& outputs() const { return outputs_; }
  const Matrix& translated() const { return translated_; }

 private:
  std::string name_;
  Matrix inputs_;
  Matrix outputs_;
  Matrix translated_;
};

}  // namespace dea
