#include "dea/preprocess.hpp"

#include "dea/datagen.hpp"
#include "dea/oracle.hpp"

#include "doctest.h"
#include "support/fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace dea;
using dea::testing::dea5;

TEST_CASE("dimension sort picks per-coordinate maximizers") {
  const Dataset ds = dea5();
  CHECK(dimension_sort(ds) == IndexSet{0, 2});  // A maximizes -x, C maximizes y

  SUBCASE("fully dominant DMU collapses to a singleton") {
    Matrix x(3, 1), y(3, 1);
    x << 1, 2, 3;
    y << 9, 5, 1;
    CHECK(dimension_sort(Dataset("dom", x, y)) == IndexSet{0});
  }
  SUBCASE("coordinate ties break lexicographically") {
    // Rows 0 and 1 tie on the first translated coordinate; row 1 wins the
    // remaining-coordinate comparison.
    Matrix x(3, 2), y(3, 1);
    x << 1, 5, 1, 2, 4, 1;
    y << 1, 1, 2;
    const IndexSet seed = dimension_sort(Dataset("tie", x, y));
    CHECK(set_contains(seed, 1));
    CHECK_FALSE(set_contains(seed, 0));
  }
}

TEST_CASE("dimension sort output is extreme per the oracle") {
  for (const uint64_t seed : {11ull, 12ull, 13ull}) {
    GenSpec spec;
    spec.n = 60;
    spec.m1 = 2;
    spec.m2 = 1;
    spec.target_density = 0.2;
    spec.seed = seed;
    const Dataset ds = generate(spec);
    const ClassificationReport truth = classify_all(ds);
    for (const Index i : dimension_sort(ds)) {
      CAPTURE(seed);
      CHECK(truth.labels[static_cast<size_t>(i)] ==
            ClassificationReport::Label::extreme_efficient);
    }
  }
}

TEST_CASE("prescore ranks") {
  const Dataset ds = dea5();
  const Vector s = prescore(ds);
  // Hand-computed fractional ranks: A=.55 B=.65 C=.50 D=.40 E=.40.
  CHECK(s(0) == doctest::Approx(0.55));
  CHECK(s(1) == doctest::Approx(0.65));
  CHECK(s(2) == doctest::Approx(0.50));
  CHECK(s(3) == doctest::Approx(0.40));
  CHECK(s(4) == doctest::Approx(0.40));
  CHECK(s.minCoeff() >= 0.0);
  CHECK(s.maxCoeff() <= 1.0);

  SUBCASE("dominance monotonicity") {
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<Real> coord(1.0, 9.0);
    Matrix x(10, 2), y(10, 2);
    for (Index i = 0; i < 10; ++i)
      for (Index j = 0; j < 2; ++j) {
        x(i, j) = coord(rng);
        y(i, j) = coord(rng);
      }
    // Row 1 dominates row 0 componentwise.
    x.row(1) = x.row(0).array() - 0.25;
    y.row(1) = y.row(0).array() + 0.25;
    const Vector ps = prescore(Dataset("dom", x, y));
    CHECK(ps(1) >= ps(0));
  }
  SUBCASE("identical DMUs share one prescore") {
    Matrix x = Matrix::Constant(4, 1, 2.0), y = Matrix::Constant(4, 1, 3.0);
    const Vector ps = prescore(Dataset("same", x, y));
    CHECK(ps.maxCoeff() == doctest::Approx(ps.minCoeff()));
  }
  SUBCASE("permutation equivariance") {
    const Dataset base = dea5();
    const std::vector<Index> perm{3, 0, 4, 2, 1};
    Matrix x(5, 1), y(5, 1);
    for (Index i = 0; i < 5; ++i) {
      x(i, 0) = base.inputs()(perm[static_cast<size_t>(i)], 0);
      y(i, 0) = base.outputs()(perm[static_cast<size_t>(i)], 0);
    }
    const Vector sp = prescore(Dataset("perm", x, y));
    const Vector sb = prescore(base);
    for (Index i = 0; i < 5; ++i)
      CHECK(sp(i) == doctest::Approx(sb(perm[static_cast<size_t>(i)])));
  }
}

TEST_CASE("initializing subset sizes match the square-root rule") {
  CHECK(initial_subset_size(25000) == 159);
  CHECK(initial_subset_size(50000) == 224);
  CHECK(initial_subset_size(75000) == 274);
  CHECK(initial_subset_size(100000) == 317);
  CHECK(initial_subset_size(1) == 1);
}

TEST_CASE("initial subset selection") {
  const Dataset ds = dea5();
  const PreprocessorOutput prep = run_preprocessors(ds);
  REQUIRE(prep.extreme_seed == IndexSet{0, 2});
  REQUIRE(prep.m_hat == 2);

  SUBCASE("seed plus top prescorers") {
    CHECK(select_initial_subset(ds, 3, prep) == IndexSet{0, 1, 2});
    CHECK(select_initial_subset(ds, 5, prep) == IndexSet{0, 1, 2, 3, 4});
  }
  SUBCASE("always contains the whole seed") {
    const IndexSet subset = select_initial_subset(ds, 2, prep);
    for (const Index s : prep.extreme_seed) CHECK(set_contains(subset, s));
  }
  SUBCASE("cutoff ties resolved by lower index") {
    PreprocessorOutput tied = prep;
    tied.prescores.resize(5);
    tied.prescores << 0.9, 0.5, 0.9, 0.4, 0.4;  // exact tie between 3 and 4
    const IndexSet subset = select_initial_subset(ds, 4, tied);
    CHECK(set_contains(subset, 3));
    CHECK_FALSE(set_contains(subset, 4));
  }
  SUBCASE("contract errors") {
    CHECK_THROWS_AS(static_cast<void>(select_initial_subset(ds, 1, prep)),
                    std::invalid_argument);
    CHECK_THROWS_AS(static_cast<void>(select_initial_subset(ds, 6, prep)),
                    std::invalid_argument);
  }
}
