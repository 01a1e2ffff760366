#pragma once

#include "wvo/lp.hpp"
#include "wvo/rational.hpp"

#include <optional>
#include <vector>

namespace wvo {

/// One inequality ⟨normal, x⟩ <= rhs.
struct HalfSpace {
  Vec normal;
  Rational rhs;

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

/// Finite intersection of closed half-spaces in Qⁿ. No rows means the whole space.
class Polyhedron {
 public:
  Polyhedron() = default;
  explicit Polyhedron(std::size_t dim) : dim_(dim) {}
  Polyhedron(std::size_t dim, std::vector<HalfSpace> rows);

  static Polyhedron whole_space(std::size_t dim) { return Polyhedron(dim); }
  /// The box [lo, hi]ⁿ.
  static Polyhedron box(std::size_t dim, const Rational& lo, const Rational& hi);
  static Polyhedron point(const Vec& p);

  std::size_t dim() const { return dim_; }
  const std::vector<HalfSpace>& rows() const { return rows_; }
  bool is_whole_space() const { return rows_.empty(); }

  void add_row(Vec normal, Rational rhs);
  Polyhedron intersect(const Polyhedron& other) const;

  bool contains(const Vec& x) const;
  bool is_empty() const;
  std::optional<Vec> find_point() const;

  /// Adds every row to `sys`, reading x from variables [offset, offset + dim).
  void append_to(StrictSystem& sys, std::size_t offset = 0) const;
  void append_to(LinearProgram& lp, std::size_t offset = 0) const;

  friend bool operator==(const Polyhedron&, const Polyhedron&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<HalfSpace> rows_;
};

/// Places `a` into a zero vector of length `total` starting at `offset`.
Vec embed(const Vec& a, std::size_t total, std::size_t offset);

}  // namespace wvo
