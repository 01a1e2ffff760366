#include "doctest.h"
#include "support.hpp"
#include "wvo/conjugate.hpp"
#include "wvo/examples.hpp"
#include "wvo/optimality.hpp"
#include "wvo/order.hpp"

using namespace wvo;
using namespace wvo::testing;

namespace {

const Problem EX = examples::example_problem();

Matrix col(const Rational& a, const Rational& b) { return Matrix{{a}, {b}}; }

Matrix random_weak_multiplier(const Problem& p, std::mt19937_64& rng) {
  while (true) {
    Matrix t(p.m(), p.p());
    for (std::size_t i = 0; i < p.m(); ++i)
      for (std::size_t j = 0; j < p.p(); ++j) t(i, j) = draw(rng, -2, 2);
    if (in_L_plus_weak(t, p.S(), p.K())) return t;
  }
}

}  // namespace

TEST_CASE("weak solutions") {
  CHECK(is_weak_solution({1}, EX));
  const Problem diag(Cone::orthant(2), Cone::orthant(1), VectorAffineMap(Matrix{{1}, {1}}, Vec{0, 0}),
                     VectorAffineMap(Matrix{{0}}, Vec{-1}), Polyhedron::box(1, 0, 1));
  CHECK_FALSE(is_weak_solution({1}, diag));
  CHECK(is_weak_solution({0}, diag));
  const Problem single(Cone::orthant(2), Cone::orthant(1), VectorAffineMap(Matrix{{3}, {-1}}, Vec{0, 0}),
                       VectorAffineMap(Matrix{{0}}, Vec{0}), Polyhedron::point({2}));
  CHECK(is_weak_solution({2}, single));
  CHECK_THROWS_AS(is_weak_solution({-1}, EX), PreconditionError);
}

TEST_CASE("condition (g)") {
  CHECK(check_condition_g({0}, col(1, 0), EX));
  CHECK_FALSE(check_condition_g({0}, col(1, 1), EX));
  const Problem zero(Cone::orthant(2), Cone::orthant(1), VectorAffineMap::zero(2, 1), VectorAffineMap::zero(1, 1),
                     Polyhedron::whole_space(1));
  CHECK(check_condition_g({0}, col(0, 0), zero));
  CHECK_THROWS_AS(check_condition_g({0}, col(-1, 1), EX), PreconditionError);
}

TEST_CASE("condition (f)") {
  CHECK(check_condition_f({0}, col(0, 2), EX));
  CHECK_FALSE(check_condition_f({0}, col(2, 1), EX));
}

TEST_CASE("conditions (j) and (i)") {
  CHECK(check_condition_j({0}, col(-1, 1), EX));
  CHECK_FALSE(check_condition_j({0}, col(1, 1), EX));
  CHECK(check_condition_i({0}, col(-1, 1), EX));
  CHECK_FALSE(check_condition_i({0}, col(1, 1), EX));
  CHECK_THROWS_AS(check_condition_j({0}, col(-1, -1), EX), PreconditionError);
}

TEST_CASE("closed-form multiplier sets on the constrained example") {
  // at x̄ = 0: (g) holds iff T ∈ [ℝ₊×{0}] ∪ [{0}×ℝ₊]; (j) holds iff t₁t₂ ≤ 0 within L₊ʷ
  for (const auto& t : grid_points(2, 2, -2, 2)) {
    const Matrix m = col(t[0], t[1]);
    if (in_L_plus(m, EX.S(), EX.K())) {
      const bool expect = t[0] * t[1] == 0;
      CHECK(check_condition_g({0}, m, EX) == expect);
      CHECK(check_condition_f({0}, m, EX) == expect);
    }
    if (in_L_plus_weak(m, EX.S(), EX.K())) CHECK(check_condition_j({0}, m, EX) == (t[0] * t[1] <= 0));
  }
}

TEST_CASE("(f) = (g), (i) = (j) and the collapse on positive multipliers") {
  std::mt19937_64 rng(109);
  int positive = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = random_instance(rng);
    const auto& p = inst.prob;
    for (int k = 0; k < 5; ++k) {
      const Vec xbar = inst.slater;
      const Matrix t = random_weak_multiplier(p, rng);
      const bool j = check_condition_j(xbar, t, p);
      CHECK(check_condition_i(xbar, t, p) == j);
      if (!in_L_plus(t, p.S(), p.K())) continue;
      ++positive;
      const bool g = check_condition_g(xbar, t, p);
      CHECK(check_condition_f(xbar, t, p) == g);
      CHECK(j == g);
    }
  }
  CHECK(positive > 10);
}

TEST_CASE("certificates for weak solutions") {
  const Certificate c = certify_weak_min({0}, EX);
  CHECK(c.T(0, 0) >= 0);
  CHECK(c.T(1, 0) >= 0);
  CHECK(c.T(0, 0) * c.T(1, 0) == 0);
  CHECK(check_condition_g({0}, c.T, EX));

  const Problem diag(Cone::orthant(2), Cone::orthant(1), VectorAffineMap(Matrix{{1}, {1}}, Vec{0, 0}),
                     VectorAffineMap(Matrix{{0}}, Vec{-1}), Polyhedron::box(1, 0, 1));
  CHECK_THROWS_AS(certify_weak_min({1}, diag), PreconditionError);
}

TEST_CASE("certification matches grid minimality on random instances") {
  std::mt19937_64 rng(113);
  int certified = 0;
  int refused = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const auto inst = random_instance(rng, InstanceStyle::GridAligned);
    const auto& p = inst.prob;
    const GridMinimalityOracle oracle(p, inst.k_generators, 4, 2);
    const Polyhedron a = p.feasible_domain();
    std::vector<Vec> cands;
    for (const auto& x : grid_points(p.n(), 1, -2, 2))
      if (a.contains(x)) cands.push_back(x);
    REQUIRE_FALSE(cands.empty());
    for (int k = 0; k < 6; ++k) {
      const Vec& x = cands[static_cast<std::size_t>(draw(rng, 0, static_cast<int>(cands.size()) - 1))];
      const bool grid = oracle.weakly_minimal(x);
      bool ok = false;
      try {
        const Certificate c = certify_weak_min(x, p);
        ok = true;
        CHECK(check_condition_g(x, c.T, p));
        CHECK(check_condition_f(x, c.T, p));
      } catch (const PreconditionError&) {
      }
      CHECK(ok == is_weak_solution(x, p));
      if (!grid) CHECK_FALSE(ok);
      if (grid && !ok) {
        // off-grid domination: the witness must be checked without the facet system
        const auto v = epi_member(Matrix(p.m(), p.n()), -p.F()(x), ConjugateTarget::feasible_indicator(), p);
        REQUIRE(v.witness_x);
        CHECK(a.contains(*v.witness_x));
        CHECK(gen_cone_interior_contains(inst.k_generators, p.F()(x) - p.F()(*v.witness_x)));
      }
      (ok ? certified : refused) += 1;
    }
  }
  CHECK(certified > 0);
  CHECK(refused > 0);
}

TEST_CASE("dual feasibility") {
  CHECK(dvop_feasible({col(0, 0), {0, 0}}, EX));
  CHECK_FALSE(dvop_feasible({col(0, 0), {1, 1}}, EX));
  const Certificate c = certify_weak_min({1}, EX);
  CHECK(dvop_feasible({c.T, EX.F()({1})}, EX));
}

TEST_CASE("strong duality sampling") {
  std::mt19937_64 rng(7);
  const auto r = strong_duality_check({2}, EX, 50, rng);
  CHECK(r.applicable);
  CHECK(r.certified_point_feasible);
  CHECK(r.samples_checked + r.samples_skipped == 50);
  CHECK(r.samples_checked > 0);
  CHECK(r.ok());

  // E = {0}: qualified through the relative interior
  const Problem trivial(Cone::orthant(2), Cone::zero(1), VectorAffineMap::zero(2, 1), VectorAffineMap::zero(1, 1),
                        Polyhedron::point({0}));
  std::mt19937_64 rng2(7);
  const auto t = strong_duality_check({0}, trivial, 20, rng2);
  CHECK(t.applicable);
  CHECK(t.ok());

  std::mt19937_64 rng3(9);
  const Problem unq = unqualified_instance(rng3);
  const Vec x = *unq.feasible_domain().find_point();
  const auto u = strong_duality_check(x, unq, 10, rng3);
  CHECK_FALSE(u.applicable);
}

TEST_CASE("strong duality sampling is deterministic for a seed") {
  std::mt19937_64 a(2024), b(2024);
  const auto r1 = strong_duality_check({2}, EX, 20, a);
  const auto r2 = strong_duality_check({2}, EX, 20, b);
  CHECK(r1.samples_checked == r2.samples_checked);
  CHECK(r1.certificate == r2.certificate);
  CHECK(a() == b());
}
