#include "wvo/cone.hpp"

#include "wvo/lp.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace wvo {

namespace {

// Row i is redundant when {a_k·y >= 0, k != i} already forces a_i·y >= 0,
// i.e. when a_k·y >= 0 (k != i), a_i·y <= -1 is infeasible.
bool redundant(const std::vector<Vec>& rows, const std::vector<bool>& alive, std::size_t i, std::size_t dim) {
  LinearProgram lp(dim);
  for (std::size_t k = 0; k < rows.size(); ++k)
    if (k != i && alive[k]) lp.add_constraint(rows[k], Sense::GreaterEq, Rational(0));
  lp.add_constraint(rows[i], Sense::LessEq, Rational(-1));
  return !lp.find_feasible_point().has_value();
}

std::vector<Vec> canonicalize(std::size_t dim, const std::vector<Vec>& facets) {
  std::vector<Vec> rows;
  for (const auto& f : facets) {
    require_dim(f, dim, "cone facet");
    if (is_zero(f)) continue;
    Vec p = primitive(f);
    if (std::find(rows.begin(), rows.end(), p) == rows.end()) rows.push_back(std::move(p));
  }
  std::vector<bool> alive(rows.size(), true);
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (redundant(rows, alive, i, dim)) alive[i] = false;
  std::vector<Vec> out;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (alive[i]) out.push_back(rows[i]);
  std::sort(out.begin(), out.end());
  return out;
}

bool satisfies(const std::vector<Vec>& facets, const Vec& y) {
  return std::all_of(facets.begin(), facets.end(), [&](const Vec& a) { return dot(a, y) >= 0; });
}

// Extreme rays of the pointed part plus a ± basis of the lineality space.
// The pointed part lives in the row space W of the facet matrix; each extreme
// ray is the one-dimensional solution of rank-1 fewer tight facets inside W.
std::vector<Vec> enumerate_generators(std::size_t dim, const std::vector<Vec>& facets) {
  const Matrix a = Matrix::from_rows(facets, dim);
  const auto lineality = nullspace(a, dim);
  const std::size_t r = dim - lineality.size();
  std::vector<Vec> gens;

  if (r > 0) {
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> choose = [&](std::size_t start) {
      if (pick.size() + 1 == r) {
        Matrix sys(0, dim);
        for (auto i : pick) sys.append_row(facets[i]);
        for (const auto& l : lineality) sys.append_row(l);
        const auto dir = sys.rows() == 0 ? nullspace(Matrix(), dim) : nullspace(sys, dim);
        if (dir.size() != 1) return;
        Vec v = dir.front();
        if (!satisfies(facets, v)) v = -v;
        if (!satisfies(facets, v)) return;
        v = primitive(v);
        if (std::find(gens.begin(), gens.end(), v) == gens.end()) gens.push_back(std::move(v));
        return;
      }
      for (std::size_t i = start; i < facets.size(); ++i) {
        pick.push_back(i);
        choose(i + 1);
        pick.pop_back();
      }
    };
    choose(0);
  }
  for (const auto& l : lineality) {
    gens.push_back(l);
    gens.push_back(-l);
  }
  return gens;
}

bool solid_by_lp(std::size_t dim, const std::vector<Vec>& facets) {
  if (facets.empty()) return true;
  LinearProgram lp(dim);
  for (const auto& a : facets) lp.add_constraint(a, Sense::GreaterEq, Rational(1));
  return lp.find_feasible_point().has_value();
}

}  // namespace

Cone::Cone(std::size_t dim, const std::vector<Vec>& facets) : dim_(dim) {
  if (dim == 0) throw DimensionError("cone dimension must be positive");
  facets_ = canonicalize(dim, facets);
  report_.pointed = facets_.empty() ? false : rank(Matrix::from_rows(facets_, dim)) == dim;
  report_.solid = solid_by_lp(dim, facets_);
  if (dim <= kMaxGeneratorDim) generators_ = enumerate_generators(dim, facets_);
}

Cone Cone::orthant(std::size_t dim) {
  std::vector<Vec> f;
  for (std::size_t j = 0; j < dim; ++j) {
    Vec e = zeros(dim);
    e[j] = 1;
    f.push_back(e);
  }
  return Cone(dim, f);
}

Cone Cone::whole_space(std::size_t dim) { return Cone(dim, {}); }

Cone Cone::zero(std::size_t dim) {
  std::vector<Vec> f;
  for (std::size_t j = 0; j < dim; ++j) {
    Vec e = zeros(dim);
    e[j] = 1;
    f.push_back(e);
    f.push_back(-e);
  }
  return Cone(dim, f);
}

Cone Cone::from_generators(std::size_t dim, const std::vector<Vec>& generators) {
  // cone(G) = (G as facets)⁺ because cones here are closed.
  return dual_cone(Cone(dim, generators));
}

Matrix Cone::facet_matrix() const { return Matrix::from_rows(facets_, dim_); }

const std::vector<Vec>& Cone::generators() const {
  if (!generators_)
    throw UnsupportedDimension("cone generators unavailable above dimension " +
                               std::to_string(kMaxGeneratorDim) + " (got " + std::to_string(dim_) + ")");
  return *generators_;
}

bool Cone::contains(const Vec& y) const {
  require_dim(y, dim_, "cone membership");
  return satisfies(facets_, y);
}

bool Cone::interior_contains(const Vec& y) const {
  require_dim(y, dim_, "cone interior membership");
  if (!report_.solid) throw PreconditionError("interior test on a cone with empty interior");
  return std::all_of(facets_.begin(), facets_.end(), [&](const Vec& a) { return dot(a, y) > 0; });
}

Vec Cone::interior_point() const {
  if (!report_.solid) throw PreconditionError("cone has empty interior");
  if (generators_) {
    Vec sum = zeros(dim_);
    for (const auto& g : *generators_) sum = sum + g;
    if (interior_contains(sum)) return sum;
  }
  LinearProgram lp(dim_);
  for (const auto& a : facets_) lp.add_constraint(a, Sense::GreaterEq, Rational(1));
  auto p = lp.find_feasible_point();
  if (!p) throw TheoremViolation("solid cone without a strictly feasible point");
  return primitive(*p);
}

Cone dual_cone(const Cone& k) {
  // K⁺ = {w : ⟨w, g⟩ >= 0 for every generator g of K}.
  return Cone(k.dim(), k.generators());
}

void require_ordering_cone(const Cone& k, const char* name) {
  const auto r = k.validate_ordering();
  if (!r.pointed) throw PreconditionError(std::string(name) + " is not pointed");
  if (!r.solid) throw PreconditionError(std::string(name) + " has empty interior");
}

}  // namespace wvo
