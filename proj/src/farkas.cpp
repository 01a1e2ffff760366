#include "wvo/farkas.hpp"

#include "wvo/conjugate.hpp"
#include "wvo/order.hpp"

#include <algorithm>
#include <set>

namespace wvo {

bool check_b1(const FarkasQuery& q, const Problem& prob) {
  return epi_member(q.L, q.y, ConjugateTarget::feasible_indicator(), prob).member;
}

bool check_b2(const FarkasQuery& q, const Matrix& t, const Problem& prob) {
  if (t.rows() != prob.m() || t.cols() != prob.p()) throw DimensionError("T must be an m×p matrix");
  if (!in_L_plus(t, prob.S(), prob.K())) throw PreconditionError("T is not in L+(S,K)");
  return epi_member(q.L, q.y, ConjugateTarget::penalized(t), prob).member;
}

bool check_b3(const FarkasQuery& q, const Matrix& t, const Problem& prob) {
  return epi_member_shifted(q.L, q.y, t, prob).member;
}

namespace {

std::optional<Matrix> search_qualified(const FarkasQuery& q, const Problem& prob) {
  if (!check_b1(q, prob)) return std::nullopt;
  return build_certificate_unchecked(q.L, q.y, prob).T;
}

}  // namespace

std::optional<Matrix> search_T(const FarkasQuery& q, const Problem& prob, MultiplierSpace) {
  if (!qualify(prob).verdict) throw PreconditionError("qualification failure: neither (c1) nor (c3) holds");
  // L₊ ⊂ L₊ʷ and the shifted test agrees with the plain one on L₊, so the
  // constructive multiplier answers both modes.
  return search_qualified(q, prob);
}

std::vector<Matrix> default_candidates(const Problem& prob) {
  std::vector<Matrix> out{Matrix(prob.m(), prob.p())};
  std::vector<Vec> ks;
  if (prob.K().has_generators())
    ks = prob.K().generators();
  else
    ks.push_back(prob.K().interior_point());
  if (!prob.S().has_generators()) return out;
  const Cone s_dual = dual_cone(prob.S());
  if (!s_dual.has_generators()) return out;
  for (const auto& k : ks)
    for (const auto& z : s_dual.generators()) out.push_back(outer(k, z));
  return out;
}

AuditReport equivalence_audit(const FarkasQuery& q, const Problem& prob) {
  return equivalence_audit(q, prob, default_candidates(prob));
}

namespace {

AuditReport audit(const FarkasQuery& q, const Problem& prob, const std::vector<Matrix>& candidates, bool qualified) {
  AuditReport r;
  r.b1 = check_b1(q, prob);
  for (const auto& t : candidates) {
    if (!in_L_plus_weak(t, prob.S(), prob.K())) continue;
    ++r.candidates_checked;
    if (check_b3(q, t, prob) && !r.b1) r.violations.push_back("(b3) holds for a candidate T but (b1) fails");
    if (!in_L_plus(t, prob.S(), prob.K())) continue;
    if (check_b2(q, t, prob) && !r.b1) r.violations.push_back("(b2) holds for a candidate T but (b1) fails");
  }

  r.qualified = qualified;
  if (!r.qualified) return r;

  r.t_positive = search_qualified(q, prob);
  r.t_weak = r.t_positive;
  if (r.b1 != r.t_positive.has_value()) r.violations.push_back("(b1) and the L+ search disagree");
  if (r.b1 != r.t_weak.has_value()) r.violations.push_back("(b1) and the L+w search disagree");
  if (r.t_positive && !check_b2(q, *r.t_positive, prob)) r.violations.push_back("found T fails (b2)");
  if (r.t_weak && !check_b3(q, *r.t_weak, prob)) r.violations.push_back("found T fails (b3)");
  return r;
}

}  // namespace

AuditReport equivalence_audit(const FarkasQuery& q, const Problem& prob, const std::vector<Matrix>& candidates) {
  return audit(q, prob, candidates, qualify(prob).verdict);
}

namespace {

Integer floor_of(const Rational& r) {
  const Integer num = numerator(r);
  const Integer den = denominator(r);
  Integer q = num / den;
  if (q * den > num) --q;
  return q;
}

}  // namespace

std::vector<Rational> rational_grid(int max_den, const Rational& lo, const Rational& hi) {
  if (max_den < 1) throw PreconditionError("grid denominator bound must be positive");
  if (lo > hi) throw PreconditionError("empty grid box");
  std::set<Rational> vals;
  for (int d = 1; d <= max_den; ++d) {
    const Integer first = -floor_of(-lo * d);
    const Integer last = floor_of(hi * d);
    for (Integer k = first; k <= last; ++k) vals.insert(Rational(k, Integer(d)));
  }
  return {vals.begin(), vals.end()};
}

GridAuditSummary grid_audit(const Problem& prob, const GridAuditOptions& options) {
  const auto grid = rational_grid(options.max_den, options.lo, options.hi);
  const std::size_t m = prob.m();
  const std::size_t n = prob.n();
  const std::size_t coords = m * n + m;
  const auto candidates = default_candidates(prob);
  const bool qualified = qualify(prob).verdict;
  GridAuditSummary s;
  std::vector<std::size_t> idx(coords, 0);
  while (true) {
    FarkasQuery q{Matrix(m, n), zeros(m)};
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) q.L(i, j) = grid[idx[i * n + j]];
      q.y[i] = grid[idx[m * n + i]];
    }
    const auto r = audit(q, prob, candidates, qualified);
    ++s.queries;
    if (r.b1) ++s.b1_true;
    if (!r.ok()) {
      ++s.violations;
      for (const auto& v : r.violations) s.messages.push_back(v);
    }
    std::size_t pos = 0;
    while (pos < coords && ++idx[pos] == grid.size()) idx[pos++] = 0;
    if (pos == coords) break;
  }
  return s;
}

}  // namespace wvo
