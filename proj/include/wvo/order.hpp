#pragma once

#include "wvo/cone.hpp"
#include "wvo/rational.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace wvo {

/// A finite set of points sharing one dimension.
struct PointSet {
  std::size_t dim = 0;
  std::vector<Vec> points;

  PointSet() = default;
  PointSet(std::size_t d, std::vector<Vec> pts);

  bool empty() const { return points.empty(); }
  std::size_t size() const { return points.size(); }

  friend bool operator==(const PointSet&, const PointSet&) = default;
};

/// Weak supremum of a set: either the extended element +∞ or a membership oracle over Y.
class WSupResult {
 public:
  enum class Kind { Infinite, Oracle };

  static WSupResult infinite() { return WSupResult(Kind::Infinite, {}); }
  static WSupResult oracle(std::function<bool(const Vec&)> f) { return WSupResult(Kind::Oracle, std::move(f)); }

  Kind kind() const { return kind_; }
  bool is_infinite() const { return kind_ == Kind::Infinite; }
  /// Requires kind() == Oracle.
  bool contains(const Vec& y) const;

 private:
  WSupResult(Kind k, std::function<bool(const Vec&)> f) : kind_(k), oracle_(std::move(f)) {}
  Kind kind_;
  std::function<bool(const Vec&)> oracle_;
};

/// {v ∈ M : no u ∈ M with u − v ∈ int K}, in input order.
PointSet wmax(const PointSet& m, const Cone& k);
/// {v ∈ M : no u ∈ M with v − u ∈ int K}, in input order.
PointSet wmin(const PointSet& m, const Cone& k);
/// The unique v̄ ∈ M with M ⊂ v̄ − K, if any.
std::optional<Vec> smax(const PointSet& m, const Cone& k);

/// y ∈ WSup M for finite M, using cl(M − int K) = M − K.
bool wsup_finite_contains(const PointSet& m, const Cone& k, const Vec& y);
/// Mirror of wsup_finite_contains under K ↦ −K.
bool winf_finite_contains(const PointSet& m, const Cone& k, const Vec& y);

/// WSup T(−S) for a linear map T : Z → Y given as an m×p matrix.
WSupResult wsup_cone_image(const Matrix& t, const Cone& s, const Cone& k);

/// T(S) ⊂ K, checked on the generators of S.
bool in_L_plus(const Matrix& t, const Cone& s, const Cone& k);
/// T(S) ⊂ K, checked facet by facet with one LP each. Needs no generators.
bool in_L_plus_lp(const Matrix& t, const Cone& s, const Cone& k);
/// T(S) ∩ (−int K) = ∅.
bool in_L_plus_weak(const Matrix& t, const Cone& s, const Cone& k);

struct DomClassification {
  bool in_dom = false;    // T ∈ dom I*_{−S}
  bool in_dom_m = false;  // T ∈ dom_M I*_{−S}
  /// When in_dom_m: whether 0 ∈ WSup T(−S) and T(−S) ⊂ −K, i.e. SMax of the conjugate value is 0.
  std::optional<bool> smax_is_zero;
};

DomClassification classify_dom(const Matrix& t, const Cone& s, const Cone& k);

}  // namespace wvo
