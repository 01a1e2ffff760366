#include "wvo/conjugate.hpp"

#include "wvo/lp.hpp"
#include "wvo/order.hpp"

namespace wvo {

namespace {

void check_query_dims(const Matrix& l, const Vec& y, const Problem& prob) {
  if (l.rows() != prob.m() || l.cols() != prob.n()) throw DimensionError("L must be an m×n matrix");
  require_dim(y, prob.m(), "y");
}

void check_multiplier_dims(const Matrix& t, const Problem& prob) {
  if (t.rows() != prob.m() || t.cols() != prob.p()) throw DimensionError("T must be an m×p matrix");
}

}  // namespace

std::optional<InteriorViolation> find_interior_violation(const InteriorViolationQuery& q, const Problem& prob) {
  const std::size_t n = q.domain.dim();
  const std::size_t p = q.cone_term ? q.cone_term->cols() : 0;
  const Cone& k = prob.K();
  StrictSystem sys(n + p);
  q.domain.append_to(sys, 0);
  if (q.cone_term)
    for (const auto& a : prob.S().facets()) sys.add_weak(embed(-a, n + p, n), Rational(0));
  // ⟨a_j, linear·x + cone_term·s + constant⟩ < 0 for every facet a_j of K.
  const Matrix kl = k.facet_matrix() * q.linear;
  const std::optional<Matrix> kt = q.cone_term ? std::optional<Matrix>(k.facet_matrix() * *q.cone_term) : std::nullopt;
  for (std::size_t j = 0; j < k.facets().size(); ++j) {
    Vec row = kl.row(j);
    if (kt) {
      const Vec tail = kt->row(j);
      row.insert(row.end(), tail.begin(), tail.end());
    }
    sys.add_strict(std::move(row), -dot(k.facets()[j], q.constant));
  }
  auto sol = solve_strict(sys);
  if (!sol) return std::nullopt;
  InteriorViolation v;
  v.x.assign(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(n));
  v.s.assign(sol->begin() + static_cast<std::ptrdiff_t>(n), sol->end());
  return v;
}

EpiVerdict epi_member(const Matrix& l, const Vec& y, const ConjugateTarget& phi, const Problem& prob) {
  check_query_dims(l, y, prob);
  const auto& f = prob.F();
  const auto& g = prob.G();
  InteriorViolationQuery q;
  // Effective domains intersect: dom(F + I_C + T∘G) = dom F ∩ C ∩ dom G.
  q.domain = phi.kind() == ConjugateTarget::Kind::FeasibleIndicator ? prob.feasible_domain() : prob.base_domain();
  q.linear = f.matrix - l;
  q.constant = y + f.offset;
  if (phi.kind() == ConjugateTarget::Kind::Penalized) {
    const Matrix& t = phi.multiplier();
    check_multiplier_dims(t, prob);
    q.linear = q.linear + t * g.matrix;
    q.constant = q.constant + t * g.offset;
  }
  EpiVerdict out;
  if (q.domain.is_empty()) {
    out.member = true;
    out.empty_domain = true;
    return out;
  }
  if (auto v = find_interior_violation(q, prob)) {
    out.member = false;
    out.witness_x = std::move(v->x);
  } else {
    out.member = true;
  }
  return out;
}

EpiVerdict epi_member_shifted(const Matrix& l, const Vec& y, const Matrix& t, const Problem& prob) {
  check_query_dims(l, y, prob);
  check_multiplier_dims(t, prob);
  if (!in_L_plus_weak(t, prob.S(), prob.K()))
    throw PreconditionError("T is not weakly positive: I*_{-S}(T) = {+inf} and the intersection degenerates");
  const auto& f = prob.F();
  const auto& g = prob.G();
  InteriorViolationQuery q;
  q.domain = prob.base_domain();
  q.linear = f.matrix - l + t * g.matrix;
  q.constant = y + f.offset + t * g.offset;
  // u ∈ T(−S) − int K  ⟺  u + T s ∈ −int K for some s ∈ S.
  q.cone_term = t;
  EpiVerdict out;
  if (q.domain.is_empty()) {
    out.member = true;
    out.empty_domain = true;
    return out;
  }
  if (auto v = find_interior_violation(q, prob)) {
    out.member = false;
    out.witness_x = std::move(v->x);
    out.witness_s = std::move(v->s);
  } else {
    out.member = true;
  }
  return out;
}

RepresentationReport representation_equality_check(const Matrix& l, const Vec& y, const Problem& prob,
                                                   const MultiplierSearcher& searcher) {
  if (!searcher.qualified(prob)) throw PreconditionError("qualification failure: neither (c1) nor (c3) holds");
  RepresentationReport r;
  r.lhs = epi_member(l, y, ConjugateTarget::feasible_indicator(), prob).member;

  if (auto t = searcher.find(l, y, prob, MultiplierSpace::Positive)) {
    if (!in_L_plus(*t, prob.S(), prob.K()))
      throw TheoremViolation("searcher returned a multiplier outside L+(S,K)");
    if (epi_member(l, y, ConjugateTarget::penalized(*t), prob).member) {
      r.via_positive = true;
      r.positive_witness = std::move(t);
    }
  }
  if (auto t = searcher.find(l, y, prob, MultiplierSpace::WeaklyPositive)) {
    if (!in_L_plus_weak(*t, prob.S(), prob.K()))
      throw TheoremViolation("searcher returned a multiplier outside L+w(S,K)");
    if (epi_member_shifted(l, y, *t, prob).member) {
      r.via_weak = true;
      r.weak_witness = std::move(t);
    }
  }
  return r;
}

}  // namespace wvo
