#include "wvo/polyhedron.hpp"

namespace wvo {

Polyhedron::Polyhedron(std::size_t dim, std::vector<HalfSpace> rows) : dim_(dim), rows_(std::move(rows)) {
  for (const auto& r : rows_) require_dim(r.normal, dim_, "polyhedron row");
}

Polyhedron Polyhedron::box(std::size_t dim, const Rational& lo, const Rational& hi) {
  Polyhedron p(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Vec e = zeros(dim);
    e[j] = 1;
    p.add_row(e, hi);
    p.add_row(-e, -lo);
  }
  return p;
}

Polyhedron Polyhedron::point(const Vec& x) {
  Polyhedron p(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    Vec e = zeros(x.size());
    e[j] = 1;
    p.add_row(e, x[j]);
    p.add_row(-e, -x[j]);
  }
  return p;
}

void Polyhedron::add_row(Vec normal, Rational rhs) {
  require_dim(normal, dim_, "polyhedron row");
  rows_.push_back({std::move(normal), std::move(rhs)});
}

Polyhedron Polyhedron::intersect(const Polyhedron& other) const {
  if (other.dim_ != dim_) throw DimensionError("polyhedron intersection: dimensions differ");
  Polyhedron out = *this;
  out.rows_.insert(out.rows_.end(), other.rows_.begin(), other.rows_.end());
  return out;
}

bool Polyhedron::contains(const Vec& x) const {
  require_dim(x, dim_, "polyhedron point");
  for (const auto& r : rows_)
    if (dot(r.normal, x) > r.rhs) return false;
  return true;
}

std::optional<Vec> Polyhedron::find_point() const {
  if (rows_.empty()) return zeros(dim_);
  LinearProgram lp(dim_);
  append_to(lp);
  return lp.find_feasible_point();
}

bool Polyhedron::is_empty() const { return !find_point().has_value(); }

void Polyhedron::append_to(StrictSystem& sys, std::size_t offset) const {
  for (const auto& r : rows_) sys.add_weak(embed(r.normal, sys.num_vars, offset), r.rhs);
}

void Polyhedron::append_to(LinearProgram& lp, std::size_t offset) const {
  for (const auto& r : rows_) lp.add_constraint(embed(r.normal, lp.num_vars(), offset), Sense::LessEq, r.rhs);
}

Vec embed(const Vec& a, std::size_t total, std::size_t offset) {
  if (offset + a.size() > total) throw DimensionError("embed: block exceeds total length");
  Vec out = zeros(total);
  for (std::size_t i = 0; i < a.size(); ++i) out[offset + i] = a[i];
  return out;
}

}  // namespace wvo
