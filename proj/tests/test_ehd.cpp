#include "dea/ehd.hpp"

#include "dea/buildhull.hpp"
#include "dea/datagen.hpp"
#include "dea/oracle.hpp"

#include "doctest.h"
#include "support/fixtures.hpp"

using namespace dea;
using dea::testing::dea5;

TEST_CASE("step 2 boundary of the subset hull") {
  const Dataset ds = dea5();
  const EhdOptions options;

  SUBCASE("interior member of the subset is dropped") {
    StepMetrics metrics;
    long aux = 0, interior = 0;
    const IndexSet bs = step2_boundary_of_subset(ds, {0, 2, 4}, {0, 2}, options,
                                                 &metrics, &aux, &interior);
    CHECK(bs == IndexSet{0, 2});  // E sits inside the A-C hull
    CHECK(metrics.lp_count == 1);
    CHECK(metrics.lp_size == 3);
    CHECK(interior == 1);
  }
  SUBCASE("subset equal to the seed needs no programs") {
    StepMetrics metrics;
    const IndexSet bs =
        step2_boundary_of_subset(ds, {0, 2}, {0, 2}, options, &metrics);
    CHECK(bs == IndexSet{0, 2});
    CHECK(metrics.lp_count == 0);
  }
  SUBCASE("duplicate inside the subset is not boundary") {
    Matrix x(3, 1), y(3, 1);
    x << 1, 1, 4;
    y << 1, 1, 4;
    const Dataset twins("twins", x, y);
    StepMetrics metrics;
    const IndexSet bs =
        step2_boundary_of_subset(twins, {0, 1, 2}, {2}, options, &metrics);
    // Rows 0 and 1 coincide; each lies on the hull spanned by its twin, so
    // the envelopment score keeps them only if phi == 1. A duplicated vertex
    // still scores phi = 1, so both stay; this documents that step 2 alone
    // does not deduplicate.
    CHECK(set_contains(bs, 2));
  }
}

TEST_CASE("step 3 partition against the subset boundary") {
  const Dataset ds = dea5();
  const EhdOptions options;
  StepMetrics metrics;
  const Step3Partition part =
      step3_exterior_partition(ds, {0, 2}, {0, 2}, options, &metrics);
  CHECK(part.exterior == IndexSet{1});
  CHECK(part.interior_found == IndexSet{3, 4});
  CHECK(part.partial_boundary.empty());
  CHECK(metrics.lp_count == 3);  // n - p
  CHECK(metrics.lp_size == 2);   // |B^S|

  SUBCASE("point exactly on a hull face lands in partial_boundary") {
    Matrix x(3, 1), y(3, 1);
    x << 1, 4, 2.5;
    y << 1, 4, 2.5;
    const Dataset mid("mid", x, y);
    StepMetrics mm;
    const Step3Partition p2 =
        step3_exterior_partition(mid, {0, 1}, {0, 1}, options, &mm);
    CHECK(p2.partial_boundary == IndexSet{2});
    CHECK(p2.exterior.empty());
  }
}

TEST_CASE("step 4 final boundary") {
  const Dataset ds = dea5();
  const EhdOptions options;
  StepMetrics metrics;
  long aux = 0;
  const IndexSet b =
      step4_final_boundary(ds, {0, 1, 2}, {0, 2}, options, &metrics, &aux);
  CHECK(b == IndexSet{0, 1, 2});
  CHECK(metrics.lp_count == 1);  // |pool| - m_hat
  CHECK(metrics.lp_size == 3);
}

TEST_CASE("full run on the five point instance") {
  const Dataset ds = dea5();
  const PreprocessorOutput prep = run_preprocessors(ds);
  const EhdResult r = run_ehd(ds, 3, prep);
  CHECK(r.initial_subset == IndexSet{0, 1, 2});
  CHECK(r.subset_boundary == IndexSet{0, 1, 2});
  CHECK(r.exterior.empty());
  CHECK(r.boundary == IndexSet{0, 1, 2});
  CHECK(r.step2.lp_count == 1);  // p - m_hat
  CHECK(r.step2.lp_size == 3);
  CHECK(r.step3.lp_count == 2);  // n - p
  CHECK(r.step4.lp_count == 1);  // |pool| - m_hat
  CHECK(r.total_lp_count == (5 - 2) + r.step4.lp_count);
  CHECK(r.productivity == 2);  // D and E caught before step 4
}

TEST_CASE("degenerate subset covering everything") {
  const Dataset ds = dea5();
  const PreprocessorOutput prep = run_preprocessors(ds);
  const EhdResult r = run_ehd(ds, 5, prep);
  CHECK(r.step3.lp_count == 0);
  CHECK(r.exterior.empty());
  CHECK(r.boundary == IndexSet{0, 1, 2});
  CHECK(r.step4.lp_size == static_cast<Index>(r.subset_boundary.size()));
}

TEST_CASE("partial boundary pool flag") {
  Matrix x(3, 1), y(3, 1);
  x << 1, 4, 2.5;
  y << 1, 4, 2.5;  // third point sits exactly on the face
  const Dataset mid("mid", x, y);
  const PreprocessorOutput prep = run_preprocessors(mid);
  REQUIRE(prep.extreme_seed == IndexSet{0, 1});

  const EhdResult off = run_ehd(mid, 2, prep);
  CHECK(off.partial_boundary == IndexSet{2});
  CHECK(off.boundary == IndexSet{0, 1});
  CHECK(off.step4.lp_size == 2);  // exactly |B^S U ext_B^S|

  EhdOptions with_flag;
  with_flag.include_partial_boundary_in_step4 = true;
  const EhdResult on = run_ehd(mid, 2, prep, with_flag);
  CHECK(on.boundary == IndexSet{0, 1, 2});
  CHECK(on.step4.lp_size == 3);
}

TEST_CASE("count identities and oracle agreement on generated instances") {
  for (const uint64_t seed : {31ull, 32ull}) {
    GenSpec spec;
    spec.n = 150;
    spec.m1 = 2;
    spec.m2 = 1;
    spec.target_density = 0.12;
    spec.seed = seed;
    const Dataset ds = generate(spec);
    const ClassificationReport truth = classify_all(ds);
    const PreprocessorOutput prep = run_preprocessors(ds);
    const Index p = initial_subset_size(ds.n());
    const EhdResult r = run_ehd(ds, p, prep);

    CAPTURE(seed);
    CHECK(r.step2.lp_count == p - prep.m_hat);
    CHECK(r.step2.lp_size == p);
    CHECK(r.step3.lp_count == ds.n() - p);
    CHECK(r.step3.lp_size == static_cast<Index>(r.subset_boundary.size()));
    const IndexSet pool = set_union(r.subset_boundary, r.exterior);
    CHECK(r.step4.lp_size == static_cast<Index>(pool.size()));
    CHECK(r.step4.lp_count == static_cast<long>(pool.size()) - prep.m_hat);
    CHECK(r.total_lp_count == (ds.n() - prep.m_hat) + r.step4.lp_count);
    CHECK(r.productivity ==
          ds.n() - r.step4.lp_count - prep.m_hat -
              static_cast<long>(r.partial_boundary.size()));

    // Suite-regime data has no non-extreme boundary points, so B = F.
    CHECK(r.boundary == truth.frame);
    // The frame is always inside the step-4 candidate pool.
    for (const Index fidx : truth.frame) CHECK(set_contains(pool, fidx));
    CHECK(r.step4.lp_size >= static_cast<Index>(truth.frame.size()));

    // Steps 2+3 solve exactly as many programs as a whole BuildHull run.
    std::vector<Index> order;
    for (Index i = 0; i < ds.n(); ++i)
      if (!set_contains(prep.extreme_seed, i)) order.push_back(i);
    const FrameResult bh = build_hull(ds, prep.extreme_seed, order);
    CHECK(r.step2.lp_count + r.step3.lp_count == bh.lp_count);
  }
}

TEST_CASE("obviation: subset already spanning the frame") {
  const Dataset ds = dea5();
  const PreprocessorOutput prep = run_preprocessors(ds);
  const EhdResult r = run_ehd(ds, 4, prep);  // A^S = {A,B,C,D} covers the frame
  CHECK(r.exterior.empty());
  CHECK(r.boundary == IndexSet{0, 1, 2});
}
