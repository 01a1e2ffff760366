#pragma once

#include "wvo/problem.hpp"
#include "wvo/rational.hpp"

#include <functional>
#include <optional>

namespace wvo {

/// The vector functions whose K-conjugate epigraphs are decided here.
class ConjugateTarget {
 public:
  enum class Kind { FeasibleIndicator, Penalized };

  /// F + I_A with A = C ∩ G⁻¹(−S).
  static ConjugateTarget feasible_indicator() { return ConjugateTarget(Kind::FeasibleIndicator, std::nullopt); }
  /// F + I_C + T∘G for a linear T : Z → Y.
  static ConjugateTarget penalized(Matrix t) { return ConjugateTarget(Kind::Penalized, std::move(t)); }

  Kind kind() const { return kind_; }
  /// Requires kind() == Penalized.
  const Matrix& multiplier() const { return *t_; }

 private:
  ConjugateTarget(Kind k, std::optional<Matrix> t) : kind_(k), t_(std::move(t)) {}
  Kind kind_;
  std::optional<Matrix> t_;
};

struct EpiVerdict {
  bool member = false;
  /// The effective domain was empty, so membership holds vacuously.
  bool empty_domain = false;
  /// When not a member: x (and s ∈ S for the shifted test) exhibiting the violation.
  std::optional<Vec> witness_x;
  std::optional<Vec> witness_s;
};

/// Search for x ∈ domain (and s ∈ S when `cone_term` is set) with
/// linear·x + cone_term·s + constant ∈ −int K.
struct InteriorViolationQuery {
  Polyhedron domain;
  Matrix linear;
  Vec constant;
  std::optional<Matrix> cone_term;
};

struct InteriorViolation {
  Vec x;
  Vec s;
};

std::optional<InteriorViolation> find_interior_violation(const InteriorViolationQuery& q, const Problem& prob);

/// (L, y) ∈ epi_K Φ* decided as: y − L(x) + Φ(x) ∉ −int K for every x in dom Φ.
/// L is m×n.
EpiVerdict epi_member(const Matrix& l, const Vec& y, const ConjugateTarget& phi, const Problem& prob);

/// (L, y) ∈ ⋂_{v ∈ I*_{−S}(T)} [epi_K(F + I_C + T∘G)* + (0, v)], decided as:
/// y − L(x) + F(x) + T(G(x)) ∉ T(−S) − int K for every x ∈ C ∩ dom F ∩ dom G.
/// Throws PreconditionError when T ∉ L₊ʷ(S, K).
EpiVerdict epi_member_shifted(const Matrix& l, const Vec& y, const Matrix& t, const Problem& prob);

enum class MultiplierSpace { Positive, WeaklyPositive };

/// Pluggable multiplier search used to audit the representation theorems.
struct MultiplierSearcher {
  std::function<bool(const Problem&)> qualified;
  std::function<std::optional<Matrix>(const Matrix&, const Vec&, const Problem&, MultiplierSpace)> find;
};

struct RepresentationReport {
  bool lhs = false;             // (L, y) ∈ epi_K(F + I_A)*
  bool via_positive = false;    // ∃ T ∈ L₊ with (L, y) ∈ epi_K(F + I_C + T∘G)*
  bool via_weak = false;        // ∃ T ∈ L₊ʷ with the shifted intersection membership
  std::optional<Matrix> positive_witness;
  std::optional<Matrix> weak_witness;

  bool consistent() const { return lhs == via_positive && lhs == via_weak; }
};

/// Evaluates both sides of the two non-asymptotic representations at (L, y),
/// re-verifying any multiplier the searcher returns. Throws PreconditionError
/// when the searcher reports that no qualification condition holds.
RepresentationReport representation_equality_check(const Matrix& l, const Vec& y, const Problem& prob,
                                                   const MultiplierSearcher& searcher);

}  // namespace wvo
