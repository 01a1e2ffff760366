#pragma once

#include "wvo/rational.hpp"

#include <optional>
#include <vector>

namespace wvo {

struct OrderingReport {
  bool pointed = false;
  bool solid = false;
  bool ok() const { return pointed && solid; }
};

/// Polyhedral cone {y : ⟨a_j, y⟩ >= 0 for every facet normal a_j}.
///
/// The facet system is canonical: every normal is a primitive integer vector,
/// duplicates and redundant rows are removed. For a solid cone the strict
/// system ⟨a_j, y⟩ > 0 therefore describes exactly its interior.
///
/// Generators (extreme rays plus ± a lineality basis) are derived for
/// dimensions up to kMaxGeneratorDim; above that they are unavailable.
class Cone {
 public:
  static constexpr std::size_t kMaxGeneratorDim = 4;

  Cone() = default;
  Cone(std::size_t dim, const std::vector<Vec>& facets);

  static Cone orthant(std::size_t dim);
  static Cone whole_space(std::size_t dim);
  static Cone zero(std::size_t dim);
  /// The cone spanned by nonnegative combinations of `generators`.
  static Cone from_generators(std::size_t dim, const std::vector<Vec>& generators);

  std::size_t dim() const { return dim_; }
  const std::vector<Vec>& facets() const { return facets_; }
  /// Facet normals stacked as rows.
  Matrix facet_matrix() const;

  bool has_generators() const { return generators_.has_value(); }
  /// Throws UnsupportedDimension when dim() > kMaxGeneratorDim.
  const std::vector<Vec>& generators() const;

  bool pointed() const { return report_.pointed; }
  bool solid() const { return report_.solid; }
  OrderingReport validate_ordering() const { return report_; }

  bool contains(const Vec& y) const;
  /// Requires a solid cone.
  bool interior_contains(const Vec& y) const;
  /// Some point in the interior with integer coordinates. Requires a solid cone.
  Vec interior_point() const;

  friend bool operator==(const Cone& a, const Cone& b) { return a.dim_ == b.dim_ && a.facets_ == b.facets_; }

 private:
  std::size_t dim_ = 0;
  std::vector<Vec> facets_;
  std::optional<std::vector<Vec>> generators_;
  OrderingReport report_;
};

Cone dual_cone(const Cone& k);

/// Throws PreconditionError unless `k` is pointed and solid.
void require_ordering_cone(const Cone& k, const char* name);

}  // namespace wvo
