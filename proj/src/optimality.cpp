#include "wvo/optimality.hpp"

#include "wvo/conjugate.hpp"
#include "wvo/lp.hpp"
#include "wvo/order.hpp"

#include <algorithm>

namespace wvo {

namespace {

void require_feasible(const Vec& xbar, const Problem& prob) {
  require_dim(xbar, prob.n(), "x̄");
  if (!prob.is_feasible(xbar)) throw PreconditionError("x̄ is not in A ∩ dom F ∩ dom G");
}

void require_positive(const Matrix& t, const Problem& prob) {
  if (t.rows() != prob.m() || t.cols() != prob.p()) throw DimensionError("T must be an m×p matrix");
  if (!in_L_plus(t, prob.S(), prob.K())) throw PreconditionError("T is not in L+(S,K)");
}

Matrix zero_l(const Problem& prob) { return Matrix(prob.m(), prob.n()); }

}  // namespace

bool is_weak_solution(const Vec& xbar, const Problem& prob) {
  require_feasible(xbar, prob);
  return epi_member(zero_l(prob), -prob.F()(xbar), ConjugateTarget::feasible_indicator(), prob).member;
}

bool check_condition_g(const Vec& xbar, const Matrix& t, const Problem& prob) {
  require_feasible(xbar, prob);
  require_positive(t, prob);
  // Look for x ∈ C ∩ dom F ∩ dom G with ⟨a_j, (F_M + T G_M) x + f0 + T g0 − F(x̄)⟩ < 0 for all j.
  const Matrix h = prob.F().matrix + t * prob.G().matrix;
  const Vec c = prob.F().offset + t * prob.G().offset - prob.F()(xbar);
  StrictSystem sys(prob.n());
  prob.base_domain().append_to(sys, 0);
  for (const auto& a : prob.K().facets()) sys.add_strict(h.transpose() * a, -dot(a, c));
  return !solve_strict(sys).has_value();
}

bool check_condition_f(const Vec& xbar, const Matrix& t, const Problem& prob) {
  require_feasible(xbar, prob);
  require_positive(t, prob);
  return epi_member(zero_l(prob), -prob.F()(xbar), ConjugateTarget::penalized(t), prob).member;
}

bool check_condition_j(const Vec& xbar, const Matrix& t, const Problem& prob) {
  require_feasible(xbar, prob);
  return epi_member_shifted(zero_l(prob), -prob.F()(xbar), t, prob).member;
}

bool check_condition_i(const Vec& xbar, const Matrix& t, const Problem& prob) {
  return check_condition_j(xbar, t, prob);
}

Certificate certify_weak_min(const Vec& xbar, const Problem& prob) {
  if (!is_weak_solution(xbar, prob)) throw PreconditionError("x̄ is not a weak solution");
  Certificate c = build_certificate(zero_l(prob), -prob.F()(xbar), prob);
  if (!check_condition_g(xbar, c.T, prob)) throw TheoremViolation("certified multiplier fails condition (g)");
  return c;
}

bool dvop_feasible(const DualPoint& dp, const Problem& prob) {
  require_dim(dp.y, prob.m(), "dual y");
  require_positive(dp.T, prob);
  // y − (F + T∘G)(x) ∈ int K  ⟺  ⟨a_j, H x⟩ < ⟨a_j, y − f0 − T g0⟩ for all j.
  const Matrix h = prob.F().matrix + dp.T * prob.G().matrix;
  const Vec c = dp.y - prob.F().offset - dp.T * prob.G().offset;
  StrictSystem sys(prob.n());
  prob.base_domain().append_to(sys, 0);
  for (const auto& a : prob.K().facets()) sys.add_strict(h.transpose() * a, dot(a, c));
  return !solve_strict(sys).has_value();
}

namespace {

int draw(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Matrix random_positive_map(const Problem& prob, const std::vector<Vec>& ks, std::mt19937_64& rng) {
  Matrix t(prob.m(), prob.p());
  const auto& s_facets = prob.S().facets();
  if (s_facets.empty()) return t;  // S⁺ = {0}
  const int terms = draw(rng, 1, 3);
  for (int i = 0; i < terms; ++i) {
    const Vec& k = ks[static_cast<std::size_t>(draw(rng, 0, static_cast<int>(ks.size()) - 1))];
    Vec z = zeros(prob.p());
    for (const auto& a : s_facets) z = z + Rational(draw(rng, 0, 3)) * a;
    t = t + outer(k, z);
  }
  return t;
}

}  // namespace

DualityReport strong_duality_check(const Vec& xbar, const Problem& prob, std::size_t samples,
                                   std::mt19937_64& rng) {
  DualityReport r;
  r.samples_requested = samples;
  if (!is_weak_solution(xbar, prob)) throw PreconditionError("x̄ is not a weak solution");
  if (!qualify(prob).verdict) return r;
  r.applicable = true;

  const Vec fx = prob.F()(xbar);
  r.certificate = build_certificate_unchecked(zero_l(prob), -fx, prob);
  r.certified_point_feasible = dvop_feasible({r.certificate->T, fx}, prob);
  if (!r.certified_point_feasible) r.violations.push_back("(T̄, F(x̄)) is not dual feasible");

  const Cone& k = prob.K();
  const std::vector<Vec> ks = k.has_generators() ? k.generators() : std::vector<Vec>{k.interior_point()};
  constexpr int kAttempts = 20;
  for (std::size_t i = 0; i < samples; ++i) {
    bool drawn = false;
    for (int attempt = 0; attempt < kAttempts && !drawn; ++attempt) {
      const Matrix t = random_positive_map(prob, ks, rng);
      const Matrix h = prob.F().matrix + t * prob.G().matrix;
      const Vec c = prob.F().offset + t * prob.G().offset;
      // Any nonzero w ∈ K⁺ is positive on int K, so a minimizer h(x_opt) of ⟨w, h(·)⟩
      // has nothing in the image strictly below h(x_opt) − k for k ∈ K. A random
      // interior functional is tried first, then single facet normals.
      std::vector<Vec> ws;
      Vec w = zeros(prob.m());
      for (const auto& a : k.facets()) w = w + Rational(draw(rng, 1, 4)) * a;
      ws.push_back(w);
      std::vector<Vec> singles = k.facets();
      std::shuffle(singles.begin(), singles.end(), rng);
      ws.insert(ws.end(), singles.begin(), singles.end());
      for (const auto& wv : ws) {
        LinearProgram lp(prob.n());
        prob.base_domain().append_to(lp, 0);
        lp.minimize(h.transpose() * wv);
        const auto res = lp.solve();
        if (res.status != LpStatus::Optimal) continue;
        Vec y = h * res.x + c;
        const Vec& kk = ks[static_cast<std::size_t>(draw(rng, 0, static_cast<int>(ks.size()) - 1))];
        y = y - Rational(draw(rng, 0, 2)) * kk;
        drawn = true;
        ++r.samples_checked;
        if (!dvop_feasible({t, y}, prob)) {
          r.violations.push_back("sampled pair is not dual feasible (sampler bug)");
          break;
        }
        if (k.interior_contains(y - fx)) r.violations.push_back("dual-feasible y with y − F(x̄) ∈ int K");
        break;
      }
    }
    if (!drawn) ++r.samples_skipped;
  }
  return r;
}

}  // namespace wvo
