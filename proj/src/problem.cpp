#include "wvo/problem.hpp"

namespace wvo {

VectorAffineMap::VectorAffineMap(Matrix m, Vec b) : VectorAffineMap(m, b, Polyhedron(m.cols())) {}

VectorAffineMap::VectorAffineMap(Matrix m, Vec b, Polyhedron dom)
    : matrix(std::move(m)), offset(std::move(b)), domain(std::move(dom)) {
  require_dim(offset, matrix.rows(), "affine map offset");
  if (domain.dim() != matrix.cols()) throw DimensionError("affine map domain has the wrong dimension");
}

VectorAffineMap VectorAffineMap::zero(std::size_t out_dim, std::size_t in_dim) {
  return VectorAffineMap(Matrix(out_dim, in_dim), zeros(out_dim));
}

Vec VectorAffineMap::operator()(const Vec& x) const { return matrix * x + offset; }

Problem::Problem(Cone k, Cone s, VectorAffineMap f, VectorAffineMap g, Polyhedron c)
    : k_(std::move(k)), s_(std::move(s)), f_(std::move(f)), g_(std::move(g)), c_(std::move(c)) {
  if (f_.in_dim() == 0) throw ProblemError("decision space dimension n must be positive");
  if (f_.out_dim() != k_.dim()) throw ProblemError("F maps into a space of the wrong dimension for K");
  if (g_.out_dim() != s_.dim()) throw ProblemError("G maps into a space of the wrong dimension for S");
  if (g_.in_dim() != f_.in_dim()) throw ProblemError("F and G have different input dimensions");
  if (c_.dim() != f_.in_dim()) throw ProblemError("C has the wrong dimension");
  const auto ord = k_.validate_ordering();
  if (!ord.pointed) throw ProblemError("ordering cone K is not pointed");
  if (!ord.solid) throw ProblemError("ordering cone K has empty interior");
  if (c_.is_empty()) throw ProblemError("infeasible constraint set: C is empty");
  if (feasible_domain().is_empty())
    throw ProblemError("infeasible problem: C ∩ G⁻¹(−S) does not meet dom F ∩ dom G");
}

Polyhedron Problem::base_domain() const { return c_.intersect(f_.domain).intersect(g_.domain); }

Polyhedron Problem::constraint_region() const {
  // −G(x) ∈ S  ⟺  ⟨a, G x + g⟩ <= 0 for every facet a of S.
  Polyhedron out(n());
  for (const auto& a : s_.facets()) {
    Vec row = zeros(n());
    for (std::size_t j = 0; j < n(); ++j)
      for (std::size_t i = 0; i < p(); ++i) row[j] += a[i] * g_.matrix(i, j);
    out.add_row(std::move(row), -dot(a, g_.offset));
  }
  return out;
}

Polyhedron Problem::feasible_domain() const { return base_domain().intersect(constraint_region()); }

bool Problem::is_feasible(const Vec& x) const {
  require_dim(x, n(), "decision point");
  return feasible_domain().contains(x);
}

}  // namespace wvo
