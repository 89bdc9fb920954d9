#pragma once

#include "dea/dataset.hpp"
#include "dea/types.hpp"

#include <cstdint>
#include <string>

namespace dea {

/// Synthetic VRS instance specification. Instances place round(d*n)
/// intended-frontier points on a concave spherical cap (all mutually
/// non-dominating, hence extreme up to jitter) and fill the rest with
/// strictly interior contractions toward a dominated anchor.
struct GenSpec {
  Index n = 0;
  Index m1 = 0;
  Index m2 = 0;
  Real target_density = 0.1;
  uint64_t seed = 0;
  /// Extra boundary-but-not-extreme points carved from frontier points by a
  /// single-coordinate retreat; off by default.
  Index nonextreme_boundary = 0;

  Index m() const { return m1 + m2; }
  /// "{mm}by{n}at{dd}", e.g. 05by25000at01.
  std::string name() const;
  void validate() const;
};

/// Deterministic for a fixed spec (bit-identical datasets), no duplicate
/// points, all raw values strictly positive.
Dataset generate(const GenSpec& spec);

}  // namespace dea
