#pragma once

#include "wvo/multiplier.hpp"
#include "wvo/problem.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace wvo {

/// x̄ ∈ A ∩ dom F is weakly minimal iff F(x) − F(x̄) ∉ −int K for every x ∈ A ∩ dom F.
/// Throws PreconditionError when x̄ is not feasible.
bool is_weak_solution(const Vec& xbar, const Problem& prob);

/// (g): F(x) + T(G(x)) − F(x̄) ∉ −int K for all x ∈ C. Requires T ∈ L₊(S, K).
bool check_condition_g(const Vec& xbar, const Matrix& t, const Problem& prob);
/// (f): −F(x̄) ∈ (F + I_C + T∘G)*(0) + K. Requires T ∈ L₊(S, K).
bool check_condition_f(const Vec& xbar, const Matrix& t, const Problem& prob);
/// (j): F(x) + T(G(x)) − F(x̄) ∉ T(−S) − int K for all x ∈ C. Requires T ∈ L₊ʷ(S, K).
bool check_condition_j(const Vec& xbar, const Matrix& t, const Problem& prob);
/// (i): −F(x̄) − I*_{−S}(T) ⊂ (F + I_C + T∘G)*(0) + K, decided through its equivalence with (j).
bool check_condition_i(const Vec& xbar, const Matrix& t, const Problem& prob);

/// Certificate at L = 0, y = −F(x̄). Throws PreconditionError when the problem is not
/// qualified or x̄ is not a weak solution.
Certificate certify_weak_min(const Vec& xbar, const Problem& prob);

struct DualPoint {
  Matrix T;
  Vec y;
};

/// y ∉ (F + T∘G)(C ∩ dom F ∩ dom G) + int K. Requires T ∈ L₊(S, K).
bool dvop_feasible(const DualPoint& dp, const Problem& prob);

struct DualityReport {
  bool applicable = false;
  std::optional<Certificate> certificate;
  bool certified_point_feasible = false;  // (T̄, F(x̄)) is dual feasible
  std::size_t samples_requested = 0;
  std::size_t samples_checked = 0;
  std::size_t samples_skipped = 0;        // no bounded scalarization found within the retry budget
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Builds (T̄, F(x̄)) from a certificate, checks it is dual feasible, then draws
/// `samples` dual-feasible pairs (T, y) with T a random nonnegative sum of rank-one
/// positive maps and y = h(x_opt) − k, where x_opt minimizes a nonzero functional
/// from K⁺ over the image h = F + T∘G, and checks y − F(x̄) ∉ int K for each.
/// Without qualification the report is marked not applicable. Throws PreconditionError when x̄ is not a weak solution.
DualityReport strong_duality_check(const Vec& xbar, const Problem& prob, std::size_t samples,
                                   std::mt19937_64& rng);

}  // namespace wvo
