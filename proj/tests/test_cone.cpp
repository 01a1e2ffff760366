#include "doctest.h"
#include "support.hpp"
#include "wvo/cone.hpp"

using namespace wvo;
using namespace wvo::testing;

TEST_CASE("cone membership") {
  const Cone k = Cone::orthant(2);
  CHECK(k.contains({1, 0}));
  CHECK_FALSE(k.contains({-1, 2}));
  const Cone wedge(2, {Vec{-1, 1}, Vec{1, 1}});
  CHECK(wedge.contains({0, 1}));
  CHECK_FALSE(wedge.contains({2, 1}));
}

TEST_CASE("interior membership") {
  CHECK(Cone::orthant(2).interior_contains({1, 1}));
  CHECK_FALSE(Cone::orthant(2).interior_contains({1, 0}));
  CHECK(Cone::orthant(3).interior_contains({2, 3, 1}));
}

TEST_CASE("canonical facets drop redundant and duplicate rows") {
  const Cone k(2, {Vec{2, 0}, Vec{0, 3}, Vec{1, 1}, Vec{1, 0}});
  CHECK(k.facets().size() == 2);
  CHECK(k == Cone::orthant(2));
}

TEST_CASE("dual cones") {
  CHECK(dual_cone(Cone::orthant(2)) == Cone::orthant(2));
  const Cone ray = Cone::from_generators(2, {Vec{1, 1}});
  const Cone d = dual_cone(ray);
  CHECK(d.contains({1, -1}));
  CHECK(d.contains({-1, 1}));
  CHECK(d.contains({3, 0}));
  CHECK_FALSE(d.contains({-1, -1}));
  CHECK_FALSE(d.contains({-2, 1}));
  const Cone z = dual_cone(Cone::whole_space(3));
  CHECK(z.contains({0, 0, 0}));
  CHECK_FALSE(z.contains({1, 0, 0}));
  CHECK_FALSE(z.contains({0, 0, -1}));
}

TEST_CASE("ordering-cone validation") {
  CHECK(Cone::orthant(2).validate_ordering().pointed);
  CHECK(Cone::orthant(2).validate_ordering().solid);
  const Cone half(2, {Vec{0, 1}});
  CHECK_FALSE(half.validate_ordering().pointed);
  CHECK(half.validate_ordering().solid);
  const Cone ray(2, {Vec{0, 1}, Vec{0, -1}, Vec{1, 0}});
  CHECK(ray.validate_ordering().pointed);
  CHECK_FALSE(ray.validate_ordering().solid);
  CHECK_THROWS_AS(require_ordering_cone(half, "K"), PreconditionError);
}

TEST_CASE("generators and facets describe the same set") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto dim = static_cast<std::size_t>(draw(rng, 1, 3));
    const auto g = random_cone(dim, rng);
    for (int s = 0; s < 40; ++s) {
      Vec y(dim);
      for (auto& e : y) e = draw(rng, -3, 3);
      CHECK(g.cone.contains(y) == gen_cone_contains(g.generators, y));
      CHECK(g.cone.interior_contains(y) == gen_cone_interior_contains(g.generators, y));
    }
    CHECK(g.cone.interior_contains(g.cone.interior_point()));
  }
}

TEST_CASE("double dual and interior algebra on random cones") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const auto dim = static_cast<std::size_t>(draw(rng, 1, 3));
    const Cone k = random_cone(dim, rng).cone;
    const Cone dd = dual_cone(dual_cone(k));
    for (int s = 0; s < 40; ++s) {
      Vec y(dim), c(dim);
      for (auto& e : y) e = draw(rng, -3, 3);
      for (auto& e : c) e = draw(rng, -3, 3);
      CHECK(dd.contains(y) == k.contains(y));
      if (k.interior_contains(y)) CHECK(k.contains(y));
      if (k.contains(y) && k.contains(-y)) CHECK(is_zero(y));
      if (k.interior_contains(y) && k.contains(c)) CHECK(k.interior_contains(y + c));
    }
  }
}

TEST_CASE("generators are unavailable above dimension four") {
  const Cone k = Cone::orthant(5);
  CHECK_FALSE(k.has_generators());
  CHECK_THROWS_AS(k.generators(), UnsupportedDimension);
  CHECK(k.interior_contains({1, 1, 1, 1, 1}));
}
