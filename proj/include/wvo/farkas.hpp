#pragma once

#include "wvo/multiplier.hpp"
#include "wvo/problem.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wvo {

/// The pair (L, y) parameterizing every Farkas-type statement; L is m×n.
struct FarkasQuery {
  Matrix L;
  Vec y;
};

/// G(x) ∈ −S, x ∈ C  ⟹  F(x) − L(x) + y ∉ −int K.
bool check_b1(const FarkasQuery& q, const Problem& prob);
/// F(x) + T(G(x)) − L(x) + y ∉ −int K for all x ∈ C. Throws PreconditionError when T ∉ L₊(S, K).
bool check_b2(const FarkasQuery& q, const Matrix& t, const Problem& prob);
/// F(x) + T(G(x)) − L(x) + y ∉ T(−S) − int K for all x ∈ C. Throws PreconditionError when T ∉ L₊ʷ(S, K).
bool check_b3(const FarkasQuery& q, const Matrix& t, const Problem& prob);

/// Constructive multiplier search. Throws PreconditionError without qualification.
/// Returns nothing exactly when (b1) fails.
std::optional<Matrix> search_T(const FarkasQuery& q, const Problem& prob, MultiplierSpace mode);

struct AuditReport {
  bool qualified = false;
  bool b1 = false;
  /// Filled only when qualified.
  std::optional<Matrix> t_positive;
  std::optional<Matrix> t_weak;
  /// Number of candidate multipliers tried for the unconditional directions.
  std::size_t candidates_checked = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Multipliers in L₊(S, K) that cost nothing to produce: 0 and the rank-one maps k zᵀ
/// for k among K's generators (or an interior point) and z among S⁺'s generators.
std::vector<Matrix> default_candidates(const Problem& prob);

/// Cross-checks (b1), the two searches and the easy directions (b2) ⟹ (b1) and
/// (b3) ⟹ (b1) over `candidates` (any T outside L₊ʷ is skipped; T outside L₊ is
/// skipped for (b2)). Without qualification only the easy directions are audited.
AuditReport equivalence_audit(const FarkasQuery& q, const Problem& prob, const std::vector<Matrix>& candidates);
AuditReport equivalence_audit(const FarkasQuery& q, const Problem& prob);

/// Sorted distinct rationals p/q in [lo, hi] with 1 <= q <= max_den.
std::vector<Rational> rational_grid(int max_den, const Rational& lo, const Rational& hi);

struct GridAuditOptions {
  int max_den = 4;
  Rational lo = -2;
  Rational hi = 2;
};

struct GridAuditSummary {
  std::size_t queries = 0;
  std::size_t b1_true = 0;
  std::size_t violations = 0;
  std::vector<std::string> messages;
};

/// Audits every (L, y) whose m·n + m coordinates range over rational_grid(options).
/// The number of queries grows as |grid|^(m·n + m); intended for desk-scale problems.
GridAuditSummary grid_audit(const Problem& prob, const GridAuditOptions& options = {});

}  // namespace wvo
