#include "dea/datagen.hpp"

#include "dea/oracle.hpp"

#include "doctest.h"

#include <cmath>
#include <map>

using namespace dea;

TEST_CASE("names follow the size-by-cardinality-at-density pattern") {
  GenSpec spec;
  spec.n = 25000;
  spec.m1 = 3;
  spec.m2 = 2;
  spec.target_density = 0.01;
  CHECK(spec.name() == "05by25000at01");
  spec.n = 100;
  spec.m1 = 5;
  spec.m2 = 5;
  spec.target_density = 0.10;
  CHECK(spec.name() == "10by100at10");
  spec.target_density = 0.25;
  CHECK(spec.name() == "10by100at25");
}

TEST_CASE("same spec twice is bit identical") {
  GenSpec spec;
  spec.n = 300;
  spec.m1 = 2;
  spec.m2 = 2;
  spec.target_density = 0.1;
  spec.seed = 42;
  const Dataset a = generate(spec);
  const Dataset b = generate(spec);
  CHECK(a.inputs() == b.inputs());
  CHECK(a.outputs() == b.outputs());

  GenSpec other = spec;
  other.seed = 43;
  const Dataset c = generate(other);
  CHECK(a.inputs() != c.inputs());
}

TEST_CASE("single DMU instance") {
  GenSpec spec;
  spec.n = 1;
  spec.m1 = 1;
  spec.m2 = 1;
  spec.target_density = 1.0;
  spec.seed = 3;
  const Dataset ds = generate(spec);
  REQUIRE(ds.n() == 1);
  const ClassificationReport r = classify_all(ds);
  CHECK(r.density == doctest::Approx(1.0));
}

TEST_CASE("no duplicates and strict positivity") {
  GenSpec spec;
  spec.n = 400;
  spec.m1 = 3;
  spec.m2 = 2;
  spec.target_density = 0.2;
  spec.seed = 99;
  const Dataset ds = generate(spec);
  CHECK(ds.inputs().minCoeff() > 0.0);
  CHECK(ds.outputs().minCoeff() > 0.0);
  std::map<std::vector<Real>, int> rows;
  for (Index i = 0; i < ds.n(); ++i) {
    std::vector<Real> key(ds.translated().row(i).begin(),
                          ds.translated().row(i).end());
    CHECK(++rows[key] == 1);
  }
}

TEST_CASE("realized density tracks the target") {
  SUBCASE("quarter-density example") {
    GenSpec spec;
    spec.n = 100;
    spec.m1 = 2;
    spec.m2 = 1;
    spec.target_density = 0.25;
    spec.seed = 7;
    const ClassificationReport r = classify_all(generate(spec));
    CHECK(r.density >= 0.20);
    CHECK(r.density <= 0.30);
  }
  SUBCASE("ten seeds within five points of target") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
      GenSpec spec;
      spec.n = 200;
      spec.m1 = 2;
      spec.m2 = 1;
      spec.target_density = 0.10;
      spec.seed = seed;
      const ClassificationReport r = classify_all(generate(spec));
      CAPTURE(seed);
      CHECK(std::abs(r.density - spec.target_density) <= 0.05);
    }
  }
}

TEST_CASE("invalid specs are rejected") {
  GenSpec spec;
  spec.n = 0;
  spec.m1 = 1;
  spec.m2 = 1;
  spec.target_density = 0.5;
  CHECK_THROWS_AS(static_cast<void>(generate(spec)), std::invalid_argument);
  spec.n = 10;
  spec.target_density = 0.0;
  CHECK_THROWS_AS(static_cast<void>(generate(spec)), std::invalid_argument);
  spec.target_density = 0.5;
  spec.nonextreme_boundary = 20;
  CHECK_THROWS_AS(static_cast<void>(generate(spec)), std::invalid_argument);
}

TEST_CASE("injected points are boundary but not extreme") {
  GenSpec spec;
  spec.n = 60;
  spec.m1 = 2;
  spec.m2 = 1;
  spec.target_density = 0.2;
  spec.seed = 11;
  spec.nonextreme_boundary = 2;
  const ClassificationReport r = classify_all(generate(spec));
  CHECK(r.boundary.size() >= r.frame.size() + 2);
}
