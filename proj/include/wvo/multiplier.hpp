#pragma once

#include "wvo/conjugate.hpp"
#include "wvo/problem.hpp"
#include "wvo/rational.hpp"

#include <optional>

namespace wvo {

/// (c3) data for E = G(C ∩ dom F ∩ dom G) + S.
struct RiCondition {
  /// Dimension of the linear hull of E.
  std::size_t lin_dim = 0;
  /// Dimension of the affine hull of E.
  std::size_t aff_dim = 0;
  bool zero_in_ri = false;
  /// Finite dimensions make "dim lin E < +∞" automatic.
  bool holds() const { return zero_in_ri; }
};

struct QualificationReport {
  std::optional<Vec> c1;  // Slater point
  RiCondition c3;
  bool verdict = false;
};

/// x̄ ∈ C ∩ dom F ∩ dom G with G(x̄) ∈ −int S, or nothing (always nothing when S is not solid).
std::optional<Vec> check_slater(const Problem& prob);

RiCondition check_ri_condition(const Problem& prob);

QualificationReport qualify(const Problem& prob);

/// y* ∈ K⁺ with ⟨y*, k0⟩ > 0 and ⟨y*, L(x) − F(x)⟩ <= ⟨y*, y⟩ on A ∩ dom F, scaled so
/// that its largest absolute coordinate is 1. Throws PreconditionError when no such
/// functional exists, which happens exactly when (L, y) ∉ epi_K(F + I_A)*.
Vec find_separating_functional(const Matrix& l, const Vec& y, const Problem& prob);

struct ScalarDual {
  Vec z_star;
  /// min over A ∩ dom F of ⟨y*, F(x) − L(x)⟩.
  Rational primal_value;
  /// min over C ∩ dom F ∩ dom G of ⟨y*, F(x) − L(x)⟩ + ⟨z*, G(x)⟩.
  Rational dual_value;
};

/// Maximizes z ↦ inf_{x ∈ C ∩ dom F ∩ dom G} [⟨y*, F(x) − L(x)⟩ + ⟨z, G(x)⟩] over z ∈ S⁺
/// and checks that the maximum equals the constrained minimum exactly.
/// Throws PreconditionError when the scalarized primal is unbounded below.
ScalarDual solve_scalar_dual(const Vec& y_star, const Matrix& l, const Problem& prob);

/// T = k0 z*ᵀ / ⟨y*, k0⟩. Checks ⟨y*, k0⟩ > 0 and y* ∘ T = z*.
Matrix lift_multiplier(const Vec& z_star, const Vec& y_star, const Vec& k0);
/// As above, additionally checking k0 ∈ int K, z* ∈ S⁺ and T ∈ L₊(S, K).
Matrix lift_multiplier(const Vec& z_star, const Vec& y_star, const Vec& k0, const Cone& s, const Cone& k);

struct Certificate {
  Matrix T;
  Vec y_star;
  Vec z_star;
  Vec k0;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Separation, scalar dual and rank-one lift at (L, y). Requires the qualification
/// verdict and (L, y) ∈ epi_K(F + I_A)*; the returned T satisfies
/// (L, y) ∈ epi_K(F + I_C + T∘G)*, which is asserted before returning.
Certificate build_certificate(const Matrix& l, const Vec& y, const Problem& prob);
/// build_certificate for callers that have already established the qualification verdict.
Certificate build_certificate_unchecked(const Matrix& l, const Vec& y, const Problem& prob);

struct CertificateCheck {
  bool t_positive = false;       // T ∈ L₊(S, K)
  bool y_star_dual = false;      // y* ∈ K⁺
  bool k0_interior = false;      // k0 ∈ int K
  bool y_star_k0_positive = false;
  bool z_star_dual = false;      // z* ∈ S⁺
  bool lift_identity = false;    // T = k0 z*ᵀ / ⟨y*, k0⟩
  bool epi_member = false;       // (L, y) ∈ epi_K(F + I_C + T∘G)*

  bool ok() const {
    return t_positive && y_star_dual && k0_interior && y_star_k0_positive && z_star_dual && lift_identity &&
           epi_member;
  }
};

CertificateCheck verify_certificate(const Certificate& cert, const Matrix& l, const Vec& y, const Problem& prob);

/// Searcher backed by qualify() and build_certificate(). The same rank-one T serves
/// both multiplier spaces because L₊ ⊂ L₊ʷ and the shifted test collapses on L₊.
MultiplierSearcher constructive_searcher();

}  // namespace wvo
