#pragma once

#include "wvo/order.hpp"
#include "wvo/problem.hpp"

#include <optional>
#include <random>
#include <vector>

namespace wvo::testing {

int draw(std::mt19937_64& rng, int lo, int hi);
Rational draw_rational(std::mt19937_64& rng, int lo, int hi, int max_den);

/// A pointed solid cone spanned by random integer generators; the generators are kept
/// so that oracles can work from them instead of the facet system.
struct GeneratedCone {
  Cone cone;
  std::vector<Vec> generators;
};
/// Generator entries are drawn from [lo, hi].
GeneratedCone random_cone(std::size_t dim, std::mt19937_64& rng, int lo = -1, int hi = 3);

struct Instance {
  Problem prob;
  Vec slater;  // G(slater) ∈ −int S by construction
  std::vector<Vec> k_generators;
  std::vector<Vec> s_generators;
};

enum class InstanceStyle {
  General,
  /// F, G and the cut of C have entries in {−1, 0, 1}, S is an orthant and K has 0/1
  /// generators: every vertex of A has denominator at most 4 and dominance cones are wide.
  GridAligned,
};

/// n, m, p ≤ 3, C = [−2, 2]ⁿ cut by one random half-space with a margin around the
/// Slater point; integer constraint data, F offsets with denominators ≤ 4.
Instance random_instance(std::mt19937_64& rng, InstanceStyle style = InstanceStyle::General);

/// An instance where neither the Slater condition nor 0 ∈ ri E holds: G contains a
/// row g and its negative, so G(x) ∈ −S forces an equality that E only touches.
Problem unqualified_instance(std::mt19937_64& rng);

/// Exact membership tests for cone(gens) that never touch a facet description or an LP:
/// Carathéodory decomposition over linearly independent subsets.
bool gen_cone_contains(const std::vector<Vec>& gens, const Vec& d);
/// Requires cone(gens) to be solid.
bool gen_cone_interior_contains(const std::vector<Vec>& gens, const Vec& d);

/// Brute-force two-quantifier versions of the order-calculus operations.
PointSet brute_wmax(const PointSet& m, const std::vector<Vec>& gens);
PointSet brute_wmin(const PointSet& m, const std::vector<Vec>& gens);
bool brute_wsup_contains(const PointSet& m, const std::vector<Vec>& gens, const Vec& y);

/// All points p/q with q ≤ max_den in [lo, hi]ⁿ.
std::vector<Vec> grid_points(std::size_t n, int max_den, const Rational& lo, const Rational& hi);

/// Weak minimality over the rational grid points of A: the stored facet values
/// ⟨a_j, F(x)⟩ are precomputed once per instance.
class GridMinimalityOracle {
 public:
  GridMinimalityOracle(const Problem& prob, const std::vector<Vec>& k_generators, int max_den, const Rational& box);
  /// No grid point x of A has F(x) − F(x̄) ∈ −int K.
  bool weakly_minimal(const Vec& xbar) const;
  const std::vector<Vec>& feasible_points() const { return feasible_; }

 private:
  const Problem* prob_;
  std::vector<Vec> gens_;
  std::vector<Vec> feasible_;
  std::vector<Vec> images_;
};

/// Optimum of max cᵀx over {A x ≤ b} by enumerating every basic solution.
/// Requires a bounded feasible region; returns nothing when it is empty.
std::optional<Rational> vertex_enumeration_max(const std::vector<Vec>& a, const Vec& b, const Vec& c);

}  // namespace wvo::testing
