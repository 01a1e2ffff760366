#pragma once

#include "wvo/cone.hpp"
#include "wvo/polyhedron.hpp"
#include "wvo/rational.hpp"

#include <string>

namespace wvo {

/// x ↦ matrix·x + offset on an explicit effective domain (outside it the map is +∞).
struct VectorAffineMap {
  Matrix matrix;
  Vec offset;
  Polyhedron domain;

  VectorAffineMap() = default;
  VectorAffineMap(Matrix m, Vec b);
  VectorAffineMap(Matrix m, Vec b, Polyhedron dom);

  static VectorAffineMap zero(std::size_t out_dim, std::size_t in_dim);

  std::size_t in_dim() const { return matrix.cols(); }
  std::size_t out_dim() const { return matrix.rows(); }
  Vec operator()(const Vec& x) const;

  friend bool operator==(const VectorAffineMap&, const VectorAffineMap&) = default;
};

class ProblemError : public Error {
 public:
  using Error::Error;
};

/// WMin{F(x) : x ∈ C, G(x) ∈ −S} with F : Qⁿ → Qᵐ ordered by K and G : Qⁿ → Qᵖ.
class Problem {
 public:
  Problem() = default;
  /// Validates dimensions, that K is pointed and solid, that C is nonempty and
  /// that the feasible set A = C ∩ G⁻¹(−S) meets dom F.
  Problem(Cone k, Cone s, VectorAffineMap f, VectorAffineMap g, Polyhedron c);

  std::size_t n() const { return f_.in_dim(); }
  std::size_t m() const { return f_.out_dim(); }
  std::size_t p() const { return g_.out_dim(); }

  const Cone& K() const { return k_; }
  const Cone& S() const { return s_; }
  const VectorAffineMap& F() const { return f_; }
  const VectorAffineMap& G() const { return g_; }
  const Polyhedron& C() const { return c_; }

  /// C ∩ dom F ∩ dom G.
  Polyhedron base_domain() const;
  /// {x : G(x) ∈ −S} as rows over x.
  Polyhedron constraint_region() const;
  /// A ∩ dom F ∩ dom G.
  Polyhedron feasible_domain() const;
  bool is_feasible(const Vec& x) const;

  friend bool operator==(const Problem&, const Problem&) = default;

 private:
  Cone k_;
  Cone s_;
  VectorAffineMap f_;
  VectorAffineMap g_;
  Polyhedron c_;
};

}  // namespace wvo
