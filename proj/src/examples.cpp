#include "wvo/examples.hpp"

#include "wvo/conjugate.hpp"

#include <algorithm>

namespace wvo::examples {

Problem example_problem() {
  return Problem(Cone::orthant(2), Cone::orthant(1), VectorAffineMap::zero(2, 1),
                 VectorAffineMap(Matrix{{-1}}, Vec{0}), Polyhedron::whole_space(1));
}

Matrix linear_map(const Rational& alpha, const Rational& beta) { return Matrix{{alpha}, {beta}}; }

bool in_N(const Rational& a, const Rational& b, const Rational& y1, const Rational& y2) {
  if (a == 0 && b == 0) return y1 >= 0 || y2 >= 0;                   // N₁
  if (a * b < 0) return y2 >= (b / a) * y1;                          // N₂
  if (b == 0) return y2 >= 0;                                        // N₃, α ≠ 0
  if (a == 0) return y1 >= 0;                                        // N₄, β ≠ 0
  return false;                                                      // αβ > 0
}

bool in_P(const Rational& a, const Rational& b, const Rational& y1, const Rational& y2) {
  if (a <= 0 && b <= 0 && (y1 >= 0 || y2 >= 0)) return true;         // P₁
  if (a == 0 && b > 0 && y1 >= 0) return true;                       // P₂
  if (a > 0 && b == 0 && y2 >= 0) return true;                       // P₃
  if (a > 0 && b < 0 && y2 >= std::min(Rational(0), (b / a) * y1)) return true;  // P₄
  if (a < 0 && b > 0 && y1 >= std::min(Rational(0), (a / b) * y2)) return true;  // P₅
  return false;
}

bool in_Q(const Rational& t1, const Rational& t2, const Rational& a, const Rational& b, const Rational& y1,
          const Rational& y2) {
  const Rational u = a + t1;
  const Rational v = b + t2;
  if (u == 0 && v == 0 && (y1 >= 0 || y2 >= 0)) return true;         // Q₁
  if (u * v < 0 && y2 >= (v / u) * y1) return true;                  // Q₂
  if (v == 0 && u != 0 && y2 >= 0) return true;                      // Q₃
  if (u == 0 && v != 0 && y1 >= 0) return true;                      // Q₄
  return false;
}

std::vector<Rational> default_grid() {
  return {Rational(-2), Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1), Rational(2)};
}

std::vector<std::pair<Rational, Rational>> q_family_multipliers() {
  return {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 1}, {-1, 0}, {0, -1}, {1, -2}};
}

SuiteReport run_example_suite(int which, const std::vector<Rational>& grid) {
  if (which != 1 && which != 2) throw PreconditionError("example suite must be 1 or 2");
  const Problem prob = example_problem();
  SuiteReport r;
  r.which = which;
  const auto target = which == 1 ? ConjugateTarget::penalized(Matrix(2, 1))  // F + I_C with C = Q is F
                                 : ConjugateTarget::feasible_indicator();
  for (const auto& a : grid)
    for (const auto& b : grid)
      for (const auto& y1 : grid)
        for (const auto& y2 : grid) {
          const Matrix l = linear_map(a, b);
          const Vec y{y1, y2};
          ++r.tuples;
          const bool got = epi_member(l, y, target, prob).member;
          const bool want = which == 1 ? in_N(a, b, y1, y2) : in_P(a, b, y1, y2);
          ++r.comparisons;
          if (got) ++r.members;
          if (got != want) r.disagreements.push_back({which == 1 ? "N" : "P", a, b, y1, y2, got, want});
          if (which != 2) continue;
          for (const auto& [t1, t2] : q_family_multipliers()) {
            const bool q_got = epi_member(l, y, ConjugateTarget::penalized(Matrix{{t1}, {t2}}), prob).member;
            const bool q_want = in_Q(t1, t2, a, b, y1, y2);
            ++r.comparisons;
            if (q_got != q_want)
              r.disagreements.push_back({"Q(" + to_string(t1) + "," + to_string(t2) + ")", a, b, y1, y2, q_got, q_want});
          }
        }
  return r;
}

}  // namespace wvo::examples
