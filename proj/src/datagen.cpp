#include "dea/datagen.hpp"

#include "dea/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace dea {

namespace {

constexpr Real kRadius = 1000.0;
constexpr Real kJitter = 1e-3 * kRadius;

// Unit direction in the strictly positive orthant with every component
// bounded away from zero, so sphere points clear the jitter in each
// coordinate.
Vector positive_direction(Rng& rng, Index m) {
  Vector g(m);
  for (;;) {
    bool ok = true;
    for (Index j = 0; j < m; ++j) {
      g(j) = 0.05 + std::abs(rng.gaussian());
      if (g(j) > 4.05) ok = false;
    }
    if (ok) break;
  }
  return g / g.norm();
}

}  // namespace

std::string GenSpec::name() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%02lldby%lldat%02lld",
                static_cast<long long>(m()), static_cast<long long>(n),
                static_cast<long long>(std::llround(target_density * 100.0)));
  return buf;
}

void GenSpec::validate() const {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (m1 < 1 || m2 < 1)
    throw std::invalid_argument("need at least one input and one output");
  if (!(target_density > 0.0) || target_density > 1.0)
    throw std::invalid_argument("density must lie in (0, 1]");
  if (nonextreme_boundary < 0)
    throw std::invalid_argument("nonextreme_boundary must be >= 0");
  const Index k = std::clamp<Index>(
      static_cast<Index>(std::llround(target_density * static_cast<Real>(n))),
      1, n);
  if (k + nonextreme_boundary > n)
    throw std::invalid_argument("nonextreme_boundary points do not fit");
}

Dataset generate(const GenSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  const Index n = spec.n;
  const Index m = spec.m();
  const Index k = std::clamp<Index>(
      static_cast<Index>(std::llround(spec.target_density * static_cast<Real>(n))),
      1, n);
  const Index inj = spec.nonextreme_boundary;

  Vector center(m);
  center.head(spec.m1).setConstant(-2.0 * kRadius);
  center.tail(spec.m2).setConstant(kRadius);

  Matrix points(n, m);
  // Intended frontier: concave spherical cap around the anchor, jittered.
  for (Index i = 0; i < k; ++i) {
    const Vector u = positive_direction(rng, m);
    for (Index j = 0; j < m; ++j)
      points(i, j) =
          center(j) + kRadius * u(j) + rng.uniform(-kJitter, kJitter);
  }
  // Weakly efficient points: retreat a per-coordinate maximizer in one other
  // coordinate. The maximizer keeps the retreated point on the hull boundary
  // while the retreat makes it non-extreme.
  for (Index t = 0; t < inj; ++t) {
    const Index coord = t % m;
    Index owner = 0;
    for (Index i = 1; i < k; ++i)
      if (points(i, coord) > points(owner, coord)) owner = i;
    Index q = static_cast<Index>(rng.next() % static_cast<uint64_t>(m - 1));
    if (q >= coord) ++q;
    points.row(k + t) = points.row(owner);
    points(k + t, q) -= rng.uniform(0.01, 0.04) * kRadius;
  }
  // Interior points: contract a random frontier combination toward a
  // strictly dominated anchor. The anchor sits between the deep center and
  // the combination, per-coordinate, so realized depths range from deep to
  // barely inside and vary by direction. Combinations of a single frontier
  // point yield near-vertex interiors, the hard case for partial hulls.
  const Index max_combo = std::min<Index>(k, m + 1);
  for (Index i = k + inj; i < n; ++i) {
    const Index combo_size =
        1 + static_cast<Index>(rng.next() % static_cast<uint64_t>(max_combo));
    Vector combo = Vector::Zero(m);
    Real total = 0;
    for (Index c = 0; c < combo_size; ++c) {
      const Index pick = static_cast<Index>(rng.next() % static_cast<uint64_t>(k));
      const Real w = rng.uniform(0.05, 1.0);
      combo += w * points.row(pick).transpose();
      total += w;
    }
    combo /= total;
    // Most interiors are deep; a modest minority hugs the frontier, which
    // keeps partial hulls from pre-classifying everything.
    const bool shallow = rng.uniform01() < 0.12;
    Vector anchor(m);
    for (Index j = 0; j < m; ++j) {
      const Real w = shallow ? rng.uniform(0.5, 0.92) : rng.uniform(0.0, 0.5);
      anchor(j) = center(j) + w * (combo(j) - center(j));
    }
    const Real pull = rng.uniform(0.05, 0.95);
    points.row(i) = ((1.0 - pull) * combo + pull * anchor).transpose();
  }

  // Deterministic shuffle so frontier membership is not encoded in the
  // row order.
  for (Index i = n - 1; i > 0; --i) {
    const Index j =
        static_cast<Index>(rng.next() % static_cast<uint64_t>(i + 1));
    points.row(i).swap(points.row(j));
  }

  // Exact duplicates are next to impossible with continuous jitter; nudge
  // deterministically if they ever appear.
  for (;;) {
    std::map<std::vector<Real>, Index> seen;
    bool clean = true;
    for (Index i = 0; i < n; ++i) {
      std::vector<Real> key(points.row(i).begin(), points.row(i).end());
      auto [it, inserted] = seen.emplace(std::move(key), i);
      if (!inserted) {
        for (Index j = 0; j < m; ++j)
          points(i, j) += rng.uniform(-kJitter, kJitter);
        clean = false;
      }
    }
    if (clean) break;
  }

  Matrix inputs = -points.leftCols(spec.m1);
  Matrix outputs = points.rightCols(spec.m2);
  return Dataset(spec.name(), std::move(inputs), std::move(outputs));
}

}  // namespace dea
