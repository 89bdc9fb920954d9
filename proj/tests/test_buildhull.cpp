#include "dea/buildhull.hpp"

#include "dea/datagen.hpp"
#include "dea/oracle.hpp"
#include "dea/preprocess.hpp"

#include "doctest.h"
#include "support/fixtures.hpp"

#include <algorithm>
#include <random>

using namespace dea;
using dea::testing::dea5;

namespace {

std::vector<Index> complement_order(Index n, const IndexSet& init) {
  std::vector<Index> order;
  for (Index i = 0; i < n; ++i)
    if (!set_contains(init, i)) order.push_back(i);
  return order;
}

}  // namespace

TEST_CASE("five point instance, any order") {
  const Dataset ds = dea5();
  const IndexSet init{0, 2};
  for (const std::vector<Index>& order :
       {std::vector<Index>{3, 4, 1}, std::vector<Index>{1, 3, 4},
        std::vector<Index>{4, 1, 3}}) {
    const FrameResult r = build_hull(ds, init, order);
    CHECK(r.frame == IndexSet{0, 1, 2});
    CHECK(r.lp_count == 3);  // n - m_hat
    CHECK(r.hyperplane_translations == 1);
    CHECK(r.admission_order == std::vector<Index>{1});
    CHECK(r.lp_sizes.size() == 3);
  }
}

TEST_CASE("initializing with the full frame needs no translations") {
  const Dataset ds = dea5();
  const FrameResult r = build_hull(ds, {0, 1, 2}, {3, 4});
  CHECK(r.frame == IndexSet{0, 1, 2});
  CHECK(r.lp_count == 2);
  CHECK(r.hyperplane_translations == 0);
  CHECK(r.lp_sizes == std::vector<Index>{3, 3});
  CHECK(r.avg_lp_size == doctest::Approx(3.0));
}

TEST_CASE("hyperplane translation argmax and ties") {
  const Dataset ds = dea5();
  Vector pi(2);
  pi << 0.5, 0.5;

  SUBCASE("singleton candidate set") {
    long inner = 0;
    CHECK(translate_hyperplane(ds.translated(), {1}, pi, 0.0, &inner) == 1);
    CHECK(inner == 1);
  }
  SUBCASE("B uniquely maximizes the certificate functional") {
    long inner = 0;
    CHECK(translate_hyperplane(ds.translated(), {1, 3, 4}, pi, 0.0, &inner) == 1);
    CHECK(inner == 3);
  }
  SUBCASE("exact duplicates resolve to the lower index") {
    Matrix x(3, 1), y(3, 1);
    x << 2, 1, 1;
    y << 1, 3, 3;  // rows 1 and 2 identical
    const Dataset twins("twins", x, y);
    Vector w(2);
    w << 0.5, 0.5;
    CHECK(translate_hyperplane(twins.translated(), {2, 1}, w, 0.0) == 1);
  }
  SUBCASE("certificate without an exterior candidate is rejected") {
    CHECK_THROWS_AS(
        static_cast<void>(translate_hyperplane(ds.translated(), {3, 4}, pi, -10.0)),
        std::logic_error);
  }
}

TEST_CASE("order validation and init checking") {
  const Dataset ds = dea5();
  CHECK_THROWS_AS(static_cast<void>(build_hull(ds, {0, 2}, {3, 4})),
                  std::invalid_argument);  // missing point 1
  CHECK_THROWS_AS(static_cast<void>(build_hull(ds, {0, 2}, {3, 4, 4})),
                  std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(build_hull(ds, {}, {0, 1, 2, 3, 4})),
                  std::invalid_argument);

  BuildHullOptions strict;
  strict.validate_init_frame = true;
  CHECK_THROWS_AS(static_cast<void>(build_hull(ds, {3}, {0, 1, 2, 4}, strict)),
                  std::invalid_argument);  // D is interior
  CHECK(build_hull(ds, {0, 2}, {3, 4, 1}, strict).frame == IndexSet{0, 1, 2});
}

TEST_CASE("exact tie resolution mode") {
  const Dataset ds = dea5();
  BuildHullOptions exact;
  exact.exact_tie_resolution = true;
  const FrameResult r = build_hull(ds, {0, 2}, {3, 4, 1}, exact);
  CHECK(r.frame == IndexSet{0, 1, 2});

  // Exact duplicates tie on every functional; the index rule still applies
  // and the run completes with the duplicate never admitted twice.
  Matrix x(4, 1), y(4, 1);
  x << 1, 4, 2, 2;
  y << 1, 4, 3, 3;  // rows 2 and 3 coincide
  const Dataset twins("twins", x, y);
  const FrameResult t = build_hull(twins, {0, 1}, {2, 3}, exact);
  CHECK(t.frame == IndexSet{0, 1, 2});
}

TEST_CASE("ascending prescores keep programs smaller than descending") {
  // Directional statistical check over five seeds at 10% density.
  Real asc_total = 0, desc_total = 0;
  for (uint64_t seed = 61; seed <= 65; ++seed) {
    GenSpec spec;
    spec.n = 250;
    spec.m1 = 2;
    spec.m2 = 1;
    spec.target_density = 0.10;
    spec.seed = seed;
    const Dataset ds = generate(spec);
    const PreprocessorOutput prep = run_preprocessors(ds);
    std::vector<Index> order = complement_order(ds.n(), prep.extreme_seed);
    std::sort(order.begin(), order.end(), [&](Index a, Index b) {
      if (prep.prescores(a) != prep.prescores(b))
        return prep.prescores(a) < prep.prescores(b);
      return a < b;
    });
    asc_total += build_hull(ds, prep.extreme_seed, order).avg_lp_size;
    std::reverse(order.begin(), order.end());
    desc_total += build_hull(ds, prep.extreme_seed, order).avg_lp_size;
  }
  CHECK(asc_total <= desc_total);
}

TEST_CASE("generated instance: counts, nesting, order invariance") {
  GenSpec spec;
  spec.n = 120;
  spec.m1 = 2;
  spec.m2 = 1;
  spec.target_density = 0.15;
  spec.seed = 2024;
  const Dataset ds = generate(spec);
  const ClassificationReport truth = classify_all(ds);
  const PreprocessorOutput prep = run_preprocessors(ds);

  const FrameResult base =
      build_hull(ds, prep.extreme_seed, complement_order(ds.n(), prep.extreme_seed));
  CHECK(base.frame == truth.frame);
  CHECK(base.lp_count == ds.n() - prep.m_hat);
  CHECK(base.hyperplane_translations ==
        static_cast<long>(base.frame.size()) - prep.m_hat);

  SUBCASE("admissions extend the initial frame to exactly the final frame") {
    IndexSet assembled = prep.extreme_seed;
    for (const Index a : base.admission_order) {
      CHECK_FALSE(set_contains(assembled, a));  // nested growth, one at a time
      assembled.push_back(a);
      std::sort(assembled.begin(), assembled.end());
      for (const Index member : assembled) CHECK(set_contains(base.frame, member));
    }
    CHECK(assembled == base.frame);
  }

  SUBCASE("lp sizes grow by one per admission, never past the frame size") {
    const Index f = static_cast<Index>(base.frame.size());
    CHECK(base.lp_sizes.front() == prep.m_hat);
    long increments = 0;
    for (size_t i = 1; i < base.lp_sizes.size(); ++i) {
      const Index diff = base.lp_sizes[i] - base.lp_sizes[i - 1];
      CHECK(diff >= 0);
      CHECK(diff <= 1);
      increments += diff;
      CHECK(base.lp_sizes[i] <= f);
    }
    // Every program after the final admission runs at |F| lambda columns;
    // the final admission itself may be the last program solved.
    CHECK(increments >= base.hyperplane_translations - 1);
    CHECK(increments <= base.hyperplane_translations);
    CHECK(base.lp_sizes.back() >= f - 1);
  }

  SUBCASE("frame is invariant across processing orders") {
    std::vector<Index> order = complement_order(ds.n(), prep.extreme_seed);
    std::mt19937_64 rng(7);
    for (int shuffle = 0; shuffle < 10; ++shuffle) {
      std::shuffle(order.begin(), order.end(), rng);
      const FrameResult r = build_hull(ds, prep.extreme_seed, order);
      CHECK(r.frame == truth.frame);
      CHECK(r.lp_count == ds.n() - prep.m_hat);
      CHECK(r.hyperplane_translations ==
            static_cast<long>(r.frame.size()) - prep.m_hat);
    }
  }
}
