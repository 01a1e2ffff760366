#include "wvo/multiplier.hpp"

#include "wvo/lp.hpp"
#include "wvo/order.hpp"

#include <algorithm>

namespace wvo {

std::optional<Vec> check_slater(const Problem& prob) {
  const Cone& s = prob.S();
  if (!s.solid()) return std::nullopt;
  const auto& g = prob.G();
  StrictSystem sys(prob.n());
  prob.base_domain().append_to(sys, 0);
  // G(x) ∈ −int S  ⟺  ⟨a, G x + g⟩ < 0 for every facet a of S.
  for (const auto& a : s.facets()) {
    Vec row = zeros(prob.n());
    for (std::size_t j = 0; j < prob.n(); ++j)
      for (std::size_t i = 0; i < prob.p(); ++i) row[j] += a[i] * g.matrix(i, j);
    sys.add_strict(std::move(row), -dot(a, g.offset));
  }
  return solve_strict(sys);
}

namespace {

// Rows a·u <= b of P = {(x, s) : x ∈ C ∩ dom F ∩ dom G, s ∈ S}.
std::vector<HalfSpace> product_rows(const Problem& prob) {
  const std::size_t n = prob.n();
  const std::size_t total = n + prob.p();
  std::vector<HalfSpace> rows;
  const Polyhedron base = prob.base_domain();
  for (const auto& r : base.rows()) rows.push_back({embed(r.normal, total, 0), r.rhs});
  for (const auto& a : prob.S().facets()) rows.push_back({embed(-a, total, n), Rational(0)});
  return rows;
}

// Indices of rows that hold with equality on all of the (nonempty) polyhedron.
// One LP maximizing the sum of capped slacks can leave some non-implicit row at
// zero slack, so the LP is repeated on the undecided rows until none moves.
std::vector<bool> implicit_equalities(const std::vector<HalfSpace>& rows, std::size_t dim) {
  std::vector<bool> implicit(rows.size(), true);
  while (true) {
    std::vector<std::size_t> cand;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (implicit[i]) cand.push_back(i);
    if (cand.empty()) break;
    LinearProgram lp(dim + cand.size());
    for (const auto& r : rows) lp.add_constraint(embed(r.normal, dim + cand.size(), 0), Sense::LessEq, r.rhs);
    Vec obj = zeros(dim + cand.size());
    for (std::size_t k = 0; k < cand.size(); ++k) {
      Vec row = embed(rows[cand[k]].normal, dim + cand.size(), 0);
      row[dim + k] = 1;
      lp.add_constraint(row, Sense::LessEq, rows[cand[k]].rhs);
      lp.set_nonnegative(dim + k);
      Vec cap = zeros(dim + cand.size());
      cap[dim + k] = 1;
      lp.add_constraint(cap, Sense::LessEq, Rational(1));
      obj[dim + k] = 1;
    }
    lp.maximize(obj);
    const auto res = lp.solve();
    if (res.status != LpStatus::Optimal) throw TheoremViolation("implicit-equality LP failed on a nonempty polyhedron");
    bool moved = false;
    for (std::size_t k = 0; k < cand.size(); ++k)
      if (res.x[dim + k] > 0) {
        implicit[cand[k]] = false;
        moved = true;
      }
    if (!moved) break;
  }
  return implicit;
}

}  // namespace

RiCondition check_ri_condition(const Problem& prob) {
  const std::size_t n = prob.n();
  const std::size_t p = prob.p();
  const std::size_t total = n + p;
  const auto rows = product_rows(prob);
  const auto implicit = implicit_equalities(rows, total);

  // φ(x, s) = G x + g + s maps P onto E; aff E = φ(aff P) and ri E = φ(ri P).
  Matrix phi(p, total);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < n; ++j) phi(i, j) = prob.G().matrix(i, j);
    phi(i, n + i) = 1;
  }
  const Vec& g0 = prob.G().offset;

  Matrix eq(0, total);
  Vec eq_rhs;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (implicit[i]) {
      eq.append_row(rows[i].normal);
      eq_rhs.push_back(rows[i].rhs);
    }

  RiCondition out;
  const auto basis = nullspace(eq, total);
  if (!basis.empty()) {
    Matrix dirs(p, basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Vec img = phi * basis[k];
      for (std::size_t i = 0; i < p; ++i) dirs(i, k) = img[i];
    }
    out.aff_dim = rank(dirs);
  }

  StrictSystem in_aff(total);
  for (std::size_t i = 0; i < eq.rows(); ++i) in_aff.add_equal(eq.row(i), eq_rhs[i]);
  for (std::size_t i = 0; i < p; ++i) in_aff.add_equal(phi.row(i), -g0[i]);
  const bool zero_in_aff = solve_strict(in_aff).has_value();
  out.lin_dim = zero_in_aff ? out.aff_dim : out.aff_dim + 1;

  if (zero_in_aff) {
    StrictSystem in_ri = in_aff;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (!implicit[i]) in_ri.add_strict(rows[i].normal, rows[i].rhs);
    out.zero_in_ri = solve_strict(in_ri).has_value();
  }
  return out;
}

QualificationReport qualify(const Problem& prob) {
  QualificationReport r;
  r.c1 = check_slater(prob);
  r.c3 = check_ri_condition(prob);
  r.verdict = r.c1.has_value() || r.c3.holds();
  return r;
}

namespace {

void check_lvec(const Matrix& l, const Vec& y, const Problem& prob) {
  if (l.rows() != prob.m() || l.cols() != prob.n()) throw DimensionError("L must be an m×n matrix");
  require_dim(y, prob.m(), "y");
}

Vec normalize_max_abs(Vec v) {
  Rational big = 0;
  for (const auto& c : v) big = std::max(big, abs(c));
  if (big == 0) return v;
  for (auto& c : v) c /= big;
  return v;
}

}  // namespace

Vec find_separating_functional(const Matrix& l, const Vec& y, const Problem& prob) {
  check_lvec(l, y, prob);
  const Cone& k = prob.K();
  const auto& facets = k.facets();
  const std::size_t r = facets.size();
  const auto dom_rows = prob.feasible_domain().rows();
  const std::size_t q = dom_rows.size();
  const std::size_t n = prob.n();
  const Vec k0 = k.interior_point();
  const Matrix lf = l - prob.F().matrix;
  const Vec shift = prob.F().offset + y;

  // Unknowns (μ, λ) >= 0 with y* = Σ μ_j a_j. By LP duality,
  // max_{x ∈ A ∩ dom F} ⟨y*, (L − F_M) x⟩ <= ⟨y*, f0 + y⟩ holds iff some λ
  // satisfies Bᵀλ = (L − F_M)ᵀ y* and cᵀλ <= ⟨y*, f0 + y⟩.
  LinearProgram lp(r + q);
  lp.set_all_nonnegative();
  std::vector<Vec> lf_t_a(r);
  for (std::size_t j = 0; j < r; ++j) lf_t_a[j] = lf.transpose() * facets[j];
  for (std::size_t c = 0; c < n; ++c) {
    Vec row = zeros(r + q);
    for (std::size_t j = 0; j < r; ++j) row[j] = -lf_t_a[j][c];
    for (std::size_t t = 0; t < q; ++t) row[r + t] = dom_rows[t].normal[c];
    lp.add_constraint(std::move(row), Sense::Equal, Rational(0));
  }
  Vec value_row = zeros(r + q);
  for (std::size_t j = 0; j < r; ++j) value_row[j] = -dot(facets[j], shift);
  for (std::size_t t = 0; t < q; ++t) value_row[r + t] = dom_rows[t].rhs;
  lp.add_constraint(std::move(value_row), Sense::LessEq, Rational(0));
  Vec norm_row = zeros(r + q);
  for (std::size_t j = 0; j < r; ++j) norm_row[j] = dot(facets[j], k0);
  lp.add_constraint(std::move(norm_row), Sense::Equal, Rational(1));

  const auto sol = lp.find_feasible_point();
  if (!sol) throw PreconditionError("separation LP infeasible: (L, y) is not in epi_K(F + I_A)*");
  Vec ys = zeros(prob.m());
  for (std::size_t j = 0; j < r; ++j) ys = ys + (*sol)[j] * facets[j];
  return normalize_max_abs(std::move(ys));
}

ScalarDual solve_scalar_dual(const Vec& y_star, const Matrix& l, const Problem& prob) {
  require_dim(y_star, prob.m(), "y*");
  if (l.rows() != prob.m() || l.cols() != prob.n()) throw DimensionError("L must be an m×n matrix");
  const std::size_t n = prob.n();
  const std::size_t p = prob.p();
  const Vec w = (prob.F().matrix - l).transpose() * y_star;
  const Rational w0 = dot(y_star, prob.F().offset);

  LinearProgram primal(n);
  prob.feasible_domain().append_to(primal, 0);
  primal.minimize(w);
  const auto pres = primal.solve();
  if (pres.status == LpStatus::Unbounded)
    throw PreconditionError("scalarized primal is unbounded below: (L, y) is not in epi_K(F + I_A)*");
  if (pres.status != LpStatus::Optimal) throw TheoremViolation("scalarized primal infeasible on a feasible problem");

  // max w0 + ⟨z, g0⟩ − cᵀλ  s.t.  Bᵀλ + w + G_Mᵀ z = 0,  z = A_Sᵀ ν,  λ, ν >= 0.
  const auto dom_rows = prob.base_domain().rows();
  const auto& s_facets = prob.S().facets();
  const std::size_t q = dom_rows.size();
  const std::size_t r = s_facets.size();
  const std::size_t vars = p + q + r;
  LinearProgram dual(vars);
  for (std::size_t t = p; t < vars; ++t) dual.set_nonnegative(t);
  const Matrix& gm = prob.G().matrix;
  for (std::size_t c = 0; c < n; ++c) {
    Vec row = zeros(vars);
    for (std::size_t i = 0; i < p; ++i) row[i] = gm(i, c);
    for (std::size_t t = 0; t < q; ++t) row[p + t] = dom_rows[t].normal[c];
    dual.add_constraint(std::move(row), Sense::Equal, -w[c]);
  }
  for (std::size_t i = 0; i < p; ++i) {
    Vec row = zeros(vars);
    row[i] = 1;
    for (std::size_t j = 0; j < r; ++j) row[p + q + j] = -s_facets[j][i];
    dual.add_constraint(std::move(row), Sense::Equal, Rational(0));
  }
  Vec obj = zeros(vars);
  for (std::size_t i = 0; i < p; ++i) obj[i] = prob.G().offset[i];
  for (std::size_t t = 0; t < q; ++t) obj[p + t] = -dom_rows[t].rhs;
  dual.maximize(obj);
  const auto dres = dual.solve();
  if (dres.status != LpStatus::Optimal) throw TheoremViolation("scalar dual LP has no optimal solution");

  ScalarDual out;
  out.z_star.assign(dres.x.begin(), dres.x.begin() + static_cast<std::ptrdiff_t>(p));
  out.primal_value = pres.value + w0;
  out.dual_value = dres.value + w0;
  if (out.primal_value != out.dual_value) throw TheoremViolation("scalar strong duality failed");
  return out;
}

Matrix lift_multiplier(const Vec& z_star, const Vec& y_star, const Vec& k0) {
  require_dim(k0, y_star.size(), "k0");
  const Rational scale = dot(y_star, k0);
  if (scale <= 0) throw PreconditionError("lift requires <y*, k0> > 0");
  const Matrix t = (Rational(1) / scale) * outer(k0, z_star);
  if (t.transpose() * y_star != z_star) throw TheoremViolation("lifted multiplier violates y* ∘ T = z*");
  return t;
}

Matrix lift_multiplier(const Vec& z_star, const Vec& y_star, const Vec& k0, const Cone& s, const Cone& k) {
  require_dim(z_star, s.dim(), "z*");
  require_dim(y_star, k.dim(), "y*");
  if (!k.interior_contains(k0)) throw PreconditionError("k0 is not in int K");
  if (!dual_cone(s).contains(z_star)) throw PreconditionError("z* is not in S+");
  Matrix t = lift_multiplier(z_star, y_star, k0);
  if (!in_L_plus(t, s, k)) throw TheoremViolation("lifted multiplier is not in L+(S,K)");
  return t;
}

Certificate build_certificate(const Matrix& l, const Vec& y, const Problem& prob) {
  check_lvec(l, y, prob);
  if (!qualify(prob).verdict) throw PreconditionError("qualification failure: neither (c1) nor (c3) holds");
  return build_certificate_unchecked(l, y, prob);
}

Certificate build_certificate_unchecked(const Matrix& l, const Vec& y, const Problem& prob) {
  check_lvec(l, y, prob);
  if (!epi_member(l, y, ConjugateTarget::feasible_indicator(), prob).member)
    throw PreconditionError("(L, y) is not in epi_K(F + I_A)*");
  Certificate c;
  c.y_star = find_separating_functional(l, y, prob);
  c.k0 = prob.K().interior_point();
  c.z_star = solve_scalar_dual(c.y_star, l, prob).z_star;
  c.T = lift_multiplier(c.z_star, c.y_star, c.k0, prob.S(), prob.K());
  if (!epi_member(l, y, ConjugateTarget::penalized(c.T), prob).member)
    throw TheoremViolation("constructed multiplier fails the epigraph test");
  return c;
}

CertificateCheck verify_certificate(const Certificate& cert, const Matrix& l, const Vec& y, const Problem& prob) {
  check_lvec(l, y, prob);
  if (cert.T.rows() != prob.m() || cert.T.cols() != prob.p()) throw DimensionError("T must be an m×p matrix");
  require_dim(cert.y_star, prob.m(), "y*");
  require_dim(cert.z_star, prob.p(), "z*");
  require_dim(cert.k0, prob.m(), "k0");
  CertificateCheck r;
  r.t_positive = in_L_plus(cert.T, prob.S(), prob.K());
  r.y_star_dual = dual_cone(prob.K()).contains(cert.y_star);
  r.k0_interior = prob.K().interior_contains(cert.k0);
  const Rational scale = dot(cert.y_star, cert.k0);
  r.y_star_k0_positive = scale > 0;
  r.z_star_dual = dual_cone(prob.S()).contains(cert.z_star);
  r.lift_identity = r.y_star_k0_positive && cert.T == (Rational(1) / scale) * outer(cert.k0, cert.z_star);
  r.epi_member = epi_member(l, y, ConjugateTarget::penalized(cert.T), prob).member;
  return r;
}

MultiplierSearcher constructive_searcher() {
  MultiplierSearcher s;
  s.qualified = [](const Problem& prob) { return qualify(prob).verdict; };
  s.find = [](const Matrix& l, const Vec& y, const Problem& prob, MultiplierSpace) -> std::optional<Matrix> {
    if (!epi_member(l, y, ConjugateTarget::feasible_indicator(), prob).member) return std::nullopt;
    return build_certificate_unchecked(l, y, prob).T;
  };
  return s;
}

}  // namespace wvo
