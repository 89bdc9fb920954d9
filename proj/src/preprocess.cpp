#include "dea/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dea {

namespace {

// Lexicographic comparison over all translated coordinates except `skip`.
bool lex_greater_excluding(const Matrix& t, Index a, Index b, Index skip) {
  for (Index j = 0; j < t.cols(); ++j) {
    if (j == skip) continue;
    if (t(a, j) != t(b, j)) return t(a, j) > t(b, j);
  }
  return false;
}

// Ascending fractional ranks (1-based), ties averaged.
Vector fractional_ranks(const Vector& values) {
  const Index n = values.size();
  std::vector<Index> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), Index(0));
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    if (values(a) != values(b)) return values(a) < values(b);
    return a < b;
  });
  Vector ranks(n);
  Index i = 0;
  while (i < n) {
    Index j = i;
    while (j + 1 < n &&
           values(order[static_cast<size_t>(j + 1)]) ==
               values(order[static_cast<size_t>(i)]))
      ++j;
    const Real avg = 0.5 * static_cast<Real>(i + j) + 1.0;
    for (Index k = i; k <= j; ++k)
      ranks(order[static_cast<size_t>(k)]) = avg;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

IndexSet dimension_sort(const Dataset& ds) {
  const Matrix& t = ds.translated();
  IndexSet picked;
  for (Index k = 0; k < ds.m(); ++k) {
    Index best = 0;
    for (Index i = 1; i < ds.n(); ++i) {
      if (t(i, k) > t(best, k)) {
        best = i;
      } else if (t(i, k) == t(best, k) &&
                 lex_greater_excluding(t, i, best, k)) {
        best = i;
      }
    }
    picked.push_back(best);
  }
  sort_unique(picked);
  return picked;
}

Vector prescore(const Dataset& ds) {
  const Index n = ds.n();
  Vector scores = Vector::Zero(n);
  for (Index r = 0; r < ds.m1(); ++r) {
    const Vector ranks = fractional_ranks(ds.inputs().col(r));
    scores.array() += 1.0 - ranks.array() / static_cast<Real>(n);
  }
  for (Index s = 0; s < ds.m2(); ++s) {
    const Vector ranks = fractional_ranks(ds.outputs().col(s));
    scores.array() += ranks.array() / static_cast<Real>(n);
  }
  scores /= static_cast<Real>(ds.m());
  return scores;
}

Index initial_subset_size(Index n) {
  return static_cast<Index>(std::ceil(std::sqrt(static_cast<Real>(n))));
}

IndexSet select_initial_subset(const Dataset& ds, Index p,
                               const PreprocessorOutput& prep) {
  const Index n = ds.n();
  const Index m_hat = static_cast<Index>(prep.extreme_seed.size());
  if (p < m_hat)
    throw std::invalid_argument(
        "initializing subset smaller than the preprocessor seed");
  if (p > n)
    throw std::invalid_argument("initializing subset larger than the dataset");

  IndexSet rest;
  rest.reserve(static_cast<size_t>(n - m_hat));
  for (Index i = 0; i < n; ++i)
    if (!set_contains(prep.extreme_seed, i)) rest.push_back(i);
  std::sort(rest.begin(), rest.end(), [&](Index a, Index b) {
    if (prep.prescores(a) != prep.prescores(b))
      return prep.prescores(a) > prep.prescores(b);
    return a < b;
  });
  IndexSet subset = prep.extreme_seed;
  subset.insert(subset.end(), rest.begin(),
                rest.begin() + static_cast<std::ptrdiff_t>(p - m_hat));
  std::sort(subset.begin(), subset.end());
  return subset;
}

PreprocessorOutput run_preprocessors(const Dataset& ds) {
  PreprocessorOutput out;
  out.extreme_seed = dimension_sort(ds);
  out.prescores = prescore(ds);
  out.m_hat = static_cast<Index>(out.extreme_seed.size());
  return out;
}

}  // namespace dea
