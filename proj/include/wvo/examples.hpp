#pragma once

#include "wvo/problem.hpp"

#include <string>
#include <vector>

namespace wvo::examples {

/// X = Z = Q, Y = Q², K = Q²₊, S = Q₊, F ≡ 0, G(x) = −x, C = Q.
/// Both golden examples share this data; the first studies F* and the second (F + I_A)*.
Problem example_problem();

/// L = x ↦ x (α, β) as a 2×1 matrix.
Matrix linear_map(const Rational& alpha, const Rational& beta);

/// Closed-form reference sets for (α, β, y₁, y₂).
bool in_N(const Rational& a, const Rational& b, const Rational& y1, const Rational& y2);
bool in_P(const Rational& a, const Rational& b, const Rational& y1, const Rational& y2);
/// Union of Q₁–Q₄ at (t₁, t₂): the K-epigraph of ((t₁, t₂) ∘ G)*.
bool in_Q(const Rational& t1, const Rational& t2, const Rational& a, const Rational& b, const Rational& y1,
          const Rational& y2);

/// {−2, −1, −1/2, 0, 1/2, 1, 2}.
std::vector<Rational> default_grid();

struct Disagreement {
  std::string family;  // "N", "P" or "Q(t1,t2)"
  Rational alpha, beta, y1, y2;
  bool computed = false;
  bool reference = false;
};

struct SuiteReport {
  int which = 0;
  std::size_t tuples = 0;
  std::size_t members = 0;
  std::size_t comparisons = 0;
  std::vector<Disagreement> disagreements;

  bool ok() const { return disagreements.empty(); }
};

/// Suite 1 compares F* membership with N₁–N₄; suite 2 compares (F + I_A)* with P₁–P₅
/// and (F + I_C + T∘G)* with the Q family for a fixed list of multipliers.
/// Every 4-tuple over `grid` is classified.
SuiteReport run_example_suite(int which, const std::vector<Rational>& grid = default_grid());

/// Multipliers (t₁, t₂) used for the Q-family comparisons of suite 2.
std::vector<std::pair<Rational, Rational>> q_family_multipliers();

}  // namespace wvo::examples
