#include "support.hpp"

#include <algorithm>
#include <functional>

namespace wvo::testing {

namespace {

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Inverse of a square matrix, or nothing when singular.
std::optional<Matrix> inverse(const Matrix& a) {
  const std::size_t n = a.rows();
  Matrix w(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w(i, j) = a(i, j);
    w(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && w(piv, c) == 0) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != c)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(w(piv, j), w(c, j));
    const Rational d = w(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) w(c, j) /= d;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || w(r, c) == 0) continue;
      const Rational f = w(r, c);
      for (std::size_t j = 0; j < 2 * n; ++j) w(r, j) -= f * w(c, j);
    }
  }
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = w(i, n + j);
  return inv;
}

// Inverses of every basis drawn from the generators, plus the coordinates of
// their sum in each basis.
struct Bases {
  std::vector<Matrix> inv;
  std::vector<Vec> center;
};

Bases bases_of(const std::vector<Vec>& gens) {
  Bases out;
  if (gens.empty()) return out;
  const std::size_t dim = gens.front().size();
  Vec c = zeros(dim);
  for (const auto& g : gens) c = c + g;
  for_each_subset(gens.size(), dim, [&](const std::vector<std::size_t>& idx) {
    Matrix b(dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t i = 0; i < dim; ++i) b(i, j) = gens[idx[j]][i];
    if (auto inv = inverse(b)) {
      out.center.push_back(*inv * c);
      out.inv.push_back(std::move(*inv));
    }
  });
  return out;
}

bool all_nonneg(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r >= 0; });
}

// d − εc stays in cone(B) for all small ε > 0.
bool interior_in_basis(const Vec& lambda0, const Vec& lambda1) {
  for (std::size_t i = 0; i < lambda0.size(); ++i) {
    if (lambda0[i] > 0) continue;
    if (lambda0[i] == 0 && lambda1[i] <= 0) continue;
    return false;
  }
  return true;
}

}  // namespace

int draw(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational draw_rational(std::mt19937_64& rng, int lo, int hi, int max_den) {
  const int q = draw(rng, 1, max_den);
  return Rational(draw(rng, lo * q, hi * q)) / q;
}

GeneratedCone random_cone(std::size_t dim, std::mt19937_64& rng, int lo, int hi) {
  if (dim == 1) return {Cone::orthant(1), {Vec{1}}};
  if (draw(rng, 0, 3) == 0) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < dim; ++i) {
      Vec e = zeros(dim);
      e[i] = 1;
      gens.push_back(e);
    }
    return {Cone::orthant(dim), gens};
  }
  while (true) {
    const std::size_t count = dim + static_cast<std::size_t>(draw(rng, 0, 1));
    std::vector<Vec> gens;
    while (gens.size() < count) {
      Vec g(dim);
      Rational s = 0;
      for (auto& e : g) {
        e = draw(rng, lo, hi);
        s += e;
      }
      // positive against (1, …, 1) keeps the cone pointed
      if (s <= 0) continue;
      g = primitive(g);
      if (std::find(gens.begin(), gens.end(), g) != gens.end()) continue;
      gens.push_back(g);
    }
    if (rank(Matrix::from_rows(gens, dim)) != dim) continue;
    return {Cone::from_generators(dim, gens), gens};
  }
}

Instance random_instance(std::mt19937_64& rng, InstanceStyle style) {
  const bool aligned = style == InstanceStyle::GridAligned;
  const int glo = aligned ? -1 : -2;
  const int ghi = aligned ? 1 : 2;
  const auto n = static_cast<std::size_t>(draw(rng, 1, 3));
  const auto m = static_cast<std::size_t>(draw(rng, 1, 3));
  const auto p = static_cast<std::size_t>(draw(rng, 1, 3));
  auto k = aligned ? random_cone(m, rng, 0, 1) : random_cone(m, rng);
  GeneratedCone s;
  if (aligned) {
    s.cone = Cone::orthant(p);
    for (std::size_t i = 0; i < p; ++i) {
      Vec e = zeros(p);
      e[i] = 1;
      s.generators.push_back(e);
    }
  } else {
    s = random_cone(p, rng);
  }

  Matrix fm(m, n);
  Vec f0(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) fm(i, j) = draw(rng, glo, ghi);
    f0[i] = draw_rational(rng, -2, 2, 4);
  }
  Vec xs(n);
  for (auto& e : xs) e = draw(rng, -1, 1);
  Matrix gm(p, n);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < n; ++j) gm(i, j) = draw(rng, glo, ghi);
  const Vec g0 = -(gm * xs) - s.cone.interior_point();

  Polyhedron c = Polyhedron::box(n, -2, 2);
  Vec a(n);
  for (auto& e : a) e = draw(rng, glo, ghi);
  if (!is_zero(a)) c.add_row(a, dot(a, xs) + draw(rng, 1, 3));

  Problem prob(k.cone, s.cone, VectorAffineMap(fm, f0), VectorAffineMap(gm, g0), c);
  return {prob, xs, k.generators, s.generators};
}

Problem unqualified_instance(std::mt19937_64& rng) {
  const auto n = static_cast<std::size_t>(draw(rng, 1, 2));
  const auto m = static_cast<std::size_t>(draw(rng, 1, 2));
  auto k = random_cone(m, rng);
  Vec g(n);
  do {
    for (auto& e : g) e = draw(rng, -2, 2);
  } while (is_zero(g));
  Vec x0(n);
  for (auto& e : x0) e = draw(rng, -1, 1);
  const Rational d = dot(g, x0);
  Matrix gm(2, n);
  for (std::size_t j = 0; j < n; ++j) {
    gm(0, j) = g[j];
    gm(1, j) = -g[j];
  }
  Matrix fm(m, n);
  Vec f0(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) fm(i, j) = draw(rng, -2, 2);
    f0[i] = draw(rng, -2, 2);
  }
  return Problem(k.cone, Cone::orthant(2), VectorAffineMap(fm, f0), VectorAffineMap(gm, Vec{-d, d}),
                 Polyhedron::box(n, -2, 2));
}

bool gen_cone_contains(const std::vector<Vec>& gens, const Vec& d) {
  const Bases b = bases_of(gens);
  for (const auto& inv : b.inv)
    if (all_nonneg(inv * d)) return true;
  return false;
}

bool gen_cone_interior_contains(const std::vector<Vec>& gens, const Vec& d) {
  const Bases b = bases_of(gens);
  for (std::size_t i = 0; i < b.inv.size(); ++i)
    if (interior_in_basis(b.inv[i] * d, b.center[i])) return true;
  return false;
}

PointSet brute_wmax(const PointSet& m, const std::vector<Vec>& gens) {
  std::vector<Vec> out;
  for (const auto& v : m.points) {
    bool dominated = false;
    for (const auto& u : m.points)
      if (gen_cone_interior_contains(gens, u - v)) dominated = true;
    if (!dominated) out.push_back(v);
  }
  return PointSet(m.dim, out);
}

PointSet brute_wmin(const PointSet& m, const std::vector<Vec>& gens) {
  std::vector<Vec> out;
  for (const auto& v : m.points) {
    bool dominated = false;
    for (const auto& u : m.points)
      if (gen_cone_interior_contains(gens, v - u)) dominated = true;
    if (!dominated) out.push_back(v);
  }
  return PointSet(m.dim, out);
}

bool brute_wsup_contains(const PointSet& m, const std::vector<Vec>& gens, const Vec& y) {
  bool below = false;
  for (const auto& v : m.points) {
    if (gen_cone_interior_contains(gens, v - y)) return false;
    if (gen_cone_contains(gens, v - y)) below = true;
  }
  return below;
}

std::vector<Vec> grid_points(std::size_t n, int max_den, const Rational& lo, const Rational& hi) {
  std::vector<Rational> axis;
  for (int q = 1; q <= max_den; ++q) {
    const Integer first = numerator(Rational(lo * q));
    for (Integer p = first; Rational(p) / q <= hi; ++p) {
      const Rational r = Rational(p) / q;
      if (r >= lo && denominator(r) == q) axis.push_back(r);
    }
  }
  std::sort(axis.begin(), axis.end());
  std::vector<Vec> out{Vec{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vec> next;
    for (const auto& v : out)
      for (const auto& r : axis) {
        Vec w = v;
        w.push_back(r);
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

GridMinimalityOracle::GridMinimalityOracle(const Problem& prob, const std::vector<Vec>& k_generators, int max_den,
                                           const Rational& box)
    : prob_(&prob), gens_(k_generators) {
  const Bases b = bases_of(gens_);
  const Polyhedron a = prob.feasible_domain();
  for (auto& x : grid_points(prob.n(), max_den, -box, box)) {
    if (!a.contains(x)) continue;
    const Vec fx = prob.F()(x);
    Vec coords;
    for (const auto& inv : b.inv) {
      const Vec l = inv * fx;
      coords.insert(coords.end(), l.begin(), l.end());
    }
    feasible_.push_back(std::move(x));
    images_.push_back(std::move(coords));
  }
}

bool GridMinimalityOracle::weakly_minimal(const Vec& xbar) const {
  // F(x̄) − F(x) ∈ int K, tested basis by basis on precomputed coordinates
  const Bases b = bases_of(gens_);
  const Vec fx = prob_->F()(xbar);
  std::vector<Vec> base;
  for (const auto& inv : b.inv) base.push_back(inv * fx);
  const std::size_t m = fx.size();
  for (const auto& coords : images_) {
    for (std::size_t k = 0; k < b.inv.size(); ++k) {
      bool inside = true;
      for (std::size_t i = 0; i < m && inside; ++i) {
        const Rational& a = base[k][i];
        const Rational& c = coords[k * m + i];
        if (a > c) continue;
        if (a == c && b.center[k][i] <= 0) continue;
        inside = false;
      }
      if (inside) return false;
    }
  }
  return true;
}

std::optional<Rational> vertex_enumeration_max(const std::vector<Vec>& a, const Vec& b, const Vec& c) {
  const std::size_t n = c.size();
  std::optional<Rational> best;
  for_each_subset(a.size(), n, [&](const std::vector<std::size_t>& idx) {
    Matrix sub(n, n);
    Vec rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) sub(i, j) = a[idx[i]][j];
      rhs[i] = b[idx[i]];
    }
    auto inv = inverse(sub);
    if (!inv) return;
    const Vec x = *inv * rhs;
    for (std::size_t r = 0; r < a.size(); ++r)
      if (dot(a[r], x) > b[r]) return;
    const Rational v = dot(c, x);
    if (!best || v > *best) best = v;
  });
  return best;
}

}  // namespace wvo::testing
