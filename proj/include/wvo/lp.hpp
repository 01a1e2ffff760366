#pragma once

#include "wvo/rational.hpp"

#include <optional>
#include <vector>

namespace wvo {

enum class Sense { LessEq, GreaterEq, Equal };

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;  // objective value, meaningful when Optimal
  Vec x;           // primal point in the caller's variables, meaningful when Optimal
};

/// Exact rational linear program solved by a two-phase tableau simplex with
/// Bland's anticycling rule. Variables are free unless marked nonnegative.
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t num_vars);

  std::size_t num_vars() const { return num_vars_; }
  std::size_t num_constraints() const { return rows_.size(); }

  void set_nonnegative(std::size_t var);
  void set_all_nonnegative();
  void add_constraint(Vec coeffs, Sense sense, Rational rhs);
  void maximize(Vec objective);
  void minimize(Vec objective);

  LpResult solve() const;
  /// Solves the feasibility problem, ignoring the objective.
  std::optional<Vec> find_feasible_point() const;

 private:
  struct Row {
    Vec coeffs;
    Sense sense;
    Rational rhs;
  };
  std::size_t num_vars_;
  std::vector<bool> nonneg_;
  std::vector<Row> rows_;
  Vec objective_;
  bool maximize_ = false;
};

/// A linear system over free variables u mixing strict rows a·u < b, weak
/// rows a·u <= b and equalities a·u = b.
struct StrictSystem {
  explicit StrictSystem(std::size_t vars) : num_vars(vars) {}

  std::size_t num_vars;
  std::vector<std::pair<Vec, Rational>> strict;
  std::vector<std::pair<Vec, Rational>> weak;
  std::vector<std::pair<Vec, Rational>> equal;
  std::vector<std::size_t> nonnegative;  // variables constrained to be >= 0

  void add_strict(Vec a, Rational b) { strict.emplace_back(std::move(a), std::move(b)); }
  void add_weak(Vec a, Rational b) { weak.emplace_back(std::move(a), std::move(b)); }
  void add_equal(Vec a, Rational b) { equal.emplace_back(std::move(a), std::move(b)); }
};

/// Returns a point satisfying every row of the system, or nothing.
/// Strict rows are handled by maximizing a common slack t <= 1 and
/// declaring the system solvable iff the optimal slack is positive.
std::optional<Vec> solve_strict(const StrictSystem& sys);

}  // namespace wvo
