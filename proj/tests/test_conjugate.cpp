#include "doctest.h"
#include "support.hpp"
#include "wvo/conjugate.hpp"
#include "wvo/examples.hpp"
#include "wvo/multiplier.hpp"
#include "wvo/order.hpp"

using namespace wvo;
using namespace wvo::testing;

namespace {

const Problem EX = examples::example_problem();
const auto FEAS = ConjugateTarget::feasible_indicator();

Matrix col(const Rational& a, const Rational& b) { return Matrix{{a}, {b}}; }

// F ≡ 0, C = X, G ≡ −1 so the constraint never binds.
Problem trivial_problem() {
  return Problem(Cone::orthant(2), Cone::orthant(1), VectorAffineMap::zero(2, 1),
                 VectorAffineMap(Matrix{{0}}, Vec{-1}), Polyhedron::whole_space(1));
}

}  // namespace

TEST_CASE("epigraph membership for the feasible-set indicator") {
  const auto v = epi_member(col(1, 0), {0, -1}, FEAS, EX);
  CHECK_FALSE(v.member);
  REQUIRE(v.witness_x);
  CHECK((*v.witness_x)[0] > 0);
  CHECK(epi_member(col(0, 0), {0, 0}, FEAS, EX).member);
  CHECK(epi_member(col(0, 0), {2, 1}, FEAS, trivial_problem()).member);
  CHECK_FALSE(epi_member(col(0, 0), {-1, -1}, FEAS, trivial_problem()).member);
}

TEST_CASE("the witness (1,0,0,-1) separates the shifted and unshifted forms") {
  const Matrix t = col(-1, 0);
  REQUIRE(in_L_plus_weak(t, EX.S(), EX.K()));
  // the shifted intersection fails: every s > 0 pushes (−s, −1) into −int K
  const auto shifted = epi_member_shifted(col(1, 0), {0, -1}, t, EX);
  CHECK_FALSE(shifted.member);
  REQUIRE(shifted.witness_s);
  CHECK((*shifted.witness_s)[0] > 0);
  // the penalized conjugate for the same T does contain the point, which is the strictness witness
  CHECK(epi_member(col(1, 0), {0, -1}, ConjugateTarget::penalized(t), EX).member);
  CHECK_FALSE(epi_member(col(1, 0), {0, -1}, FEAS, EX).member);
  CHECK(examples::in_Q(-1, 0, 1, 0, 0, -1));
  CHECK_FALSE(examples::in_P(1, 0, 0, -1));
}

TEST_CASE("shifted membership basics") {
  const Problem zero(Cone::orthant(2), Cone::orthant(1), VectorAffineMap::zero(2, 1), VectorAffineMap::zero(1, 1),
                     Polyhedron::whole_space(1));
  CHECK(epi_member_shifted(col(0, 0), {0, 0}, col(0, 0), zero).member);
  CHECK_THROWS_AS(epi_member_shifted(col(0, 0), {0, 0}, col(-1, -1), EX), PreconditionError);
}

TEST_CASE("shifted membership against a grid over (x, s)") {
  // L x = (x, x), y = 0; the tested vector is −x(1 + t₁, 1 + t₂) + s(t₁, t₂)
  const std::vector<std::pair<int, int>> ts{{0, 0}, {1, 0}, {0, 1}, {-1, 1}, {1, -1}, {2, -1}, {-1, 3}, {1, 1}, {-1, 0}};
  std::vector<Rational> axis;
  for (const auto& v : grid_points(1, 8, -8, 8)) axis.push_back(v[0]);
  std::vector<Rational> sax;
  for (const auto& a : axis)
    if (a >= 0) sax.push_back(a);
  for (const auto& [t1, t2] : ts) {
    const Matrix t = col(t1, t2);
    REQUIRE(in_L_plus_weak(t, EX.S(), EX.K()));
    bool violated = false;
    for (const auto& x : axis) {
      for (const auto& s : sax) {
        const Rational v1 = -x * (1 + t1) + s * t1;
        const Rational v2 = -x * (1 + t2) + s * t2;
        if (v1 < 0 && v2 < 0) violated = true;
      }
    }
    CHECK(epi_member_shifted(col(1, 1), {0, 0}, t, EX).member == !violated);
  }
}

TEST_CASE("representation report on the constrained example") {
  const auto searcher = constructive_searcher();
  const auto r = representation_equality_check(col(0, 0), {0, 0}, EX, searcher);
  CHECK(r.lhs);
  CHECK(r.via_positive);
  CHECK(r.via_weak);
  REQUIRE(r.positive_witness);
  CHECK(r.positive_witness->is_zero());
  CHECK(r.consistent());

  const auto neg = representation_equality_check(col(1, 0), {0, -1}, EX, searcher);
  CHECK_FALSE(neg.lhs);
  CHECK_FALSE(neg.via_positive);
  CHECK_FALSE(neg.via_weak);
  CHECK(neg.consistent());
}

TEST_CASE("representation report on random qualified instances") {
  std::mt19937_64 rng(41);
  const auto searcher = constructive_searcher();
  int members = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = random_instance(rng);
    const auto& p = inst.prob;
    for (int q = 0; q < 4; ++q) {
      Matrix l(p.m(), p.n());
      for (std::size_t i = 0; i < p.m(); ++i)
        for (std::size_t j = 0; j < p.n(); ++j) l(i, j) = draw(rng, -2, 2);
      Vec y(p.m());
      for (auto& e : y) e = draw(rng, -6, 6);
      const auto r = representation_equality_check(l, y, p, searcher);
      CHECK(r.consistent());
      if (r.lhs) ++members;
    }
  }
  CHECK(members > 0);
}

TEST_CASE("shifted and penalized membership coincide for positive multipliers") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = random_instance(rng);
    const auto& p = inst.prob;
    Matrix t(p.m(), p.p());
    const Cone s_dual = dual_cone(p.S());
    for (const auto& k : inst.k_generators)
      for (const auto& z : s_dual.generators()) t = t + Rational(draw(rng, 0, 1)) * outer(k, z);
    REQUIRE(in_L_plus(t, p.S(), p.K()));
    for (int q = 0; q < 4; ++q) {
      Matrix l(p.m(), p.n());
      for (std::size_t i = 0; i < p.m(); ++i)
        for (std::size_t j = 0; j < p.n(); ++j) l(i, j) = draw(rng, -2, 2);
      Vec y(p.m());
      for (auto& e : y) e = draw(rng, -6, 6);
      CHECK(epi_member_shifted(l, y, t, p).member == epi_member(l, y, ConjugateTarget::penalized(t), p).member);
    }
  }
}

TEST_CASE("membership is monotone along K") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    const auto inst = random_instance(rng);
    const auto& p = inst.prob;
    Matrix l(p.m(), p.n());
    for (std::size_t i = 0; i < p.m(); ++i)
      for (std::size_t j = 0; j < p.n(); ++j) l(i, j) = draw(rng, -2, 2);
    for (int q = 0; q < 6; ++q) {
      Vec y(p.m());
      for (auto& e : y) e = draw(rng, -6, 6);
      if (!epi_member(l, y, FEAS, p).member) continue;
      Vec k = zeros(p.m());
      for (const auto& g : inst.k_generators) k = k + Rational(draw(rng, 0, 3)) * g;
      CHECK(epi_member(l, y + k, FEAS, p).member);
    }
  }
}

TEST_CASE("unconstrained zero map: membership iff y avoids −int K") {
  const Problem ex1 = examples::example_problem();
  for (const auto& y : grid_points(2, 2, -2, 2))
    CHECK(epi_member(col(0, 0), y, ConjugateTarget::penalized(col(0, 0)), ex1).member ==
          !ex1.K().interior_contains(-y));
}

TEST_CASE("limits of member sequences are members") {
  std::mt19937_64 rng(53);
  const auto grid = examples::default_grid();
  auto pick = [&] { return grid[static_cast<std::size_t>(draw(rng, 0, static_cast<int>(grid.size()) - 1))]; };
  auto member = [&](const Vec& z) { return epi_member(col(z[0], z[1]), {z[2], z[3]}, FEAS, EX).member; };
  int limits = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const Vec limit{pick(), pick(), pick(), pick()};
    const Vec start{pick(), pick(), pick(), pick()};
    bool all = true;
    Vec step = start - limit;
    for (int k = 0; k < 6 && all; ++k) {
      all = member(limit + step);
      step = Rational(1, 2) * step;
    }
    if (!all) continue;
    ++limits;
    CHECK(member(limit));
  }
  CHECK(limits > 10);
}
