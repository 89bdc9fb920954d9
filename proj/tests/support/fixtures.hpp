#pragma once

// Shared test fixtures. The five-point single-input single-output instance
// below has frame {A, B, C}; D and E are interior with full-reference
// output-oriented scores 1.75 and 3.0 (hand-checkable segment arithmetic).

#include "dea/dataset.hpp"

namespace dea::testing {

// Indices: A=0, B=1, C=2, D=3, E=4.
inline Dataset dea5() {
  Matrix inputs(5, 1), outputs(5, 1);
  inputs << 1, 2, 4, 3, 2;
  outputs << 1, 3, 4, 2, 1;
  return Dataset("dea5", inputs, outputs);
}

}  // namespace dea::testing
