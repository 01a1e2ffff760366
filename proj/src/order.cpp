#include "wvo/order.hpp"

#include "wvo/lp.hpp"

#include <algorithm>
#include <numeric>

namespace wvo {

PointSet::PointSet(std::size_t d, std::vector<Vec> pts) : dim(d), points(std::move(pts)) {
  for (const auto& p : points) require_dim(p, dim, "point set member");
}

bool WSupResult::contains(const Vec& y) const {
  if (kind_ != Kind::Oracle) throw PreconditionError("WSup is +infinity; no finite members");
  return oracle_(y);
}

namespace {

void check_inputs(const PointSet& m, const Cone& k) {
  if (m.empty()) throw PreconditionError("point set is empty");
  if (m.dim != k.dim()) throw DimensionError("point set and cone dimensions differ");
  require_ordering_cone(k, "ordering cone");
}

// w ∈ int K⁺ for pointed K: u − v ∈ int K implies ⟨w, u⟩ > ⟨w, v⟩.
Vec positive_functional(const Cone& k) {
  Vec w = zeros(k.dim());
  for (const auto& a : k.facets()) w = w + a;
  return w;
}

// Points not strictly dominated in direction `sign` (+1: from above, −1: from below).
PointSet undominated(const PointSet& m, const Cone& k, int sign) {
  check_inputs(m, k);
  const Vec w = positive_functional(k);
  std::vector<Rational> score(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) score[i] = sign * dot(w, m.points[i]);
  std::vector<std::size_t> order(m.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return score[a] > score[b]; });

  std::vector<bool> keep(m.size(), true);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const auto v = order[pos];
    // Only points with a strictly larger score can dominate v.
    for (std::size_t q = 0; q < pos && score[order[q]] > score[v]; ++q) {
      const Vec diff = m.points[order[q]] - m.points[v];
      if (k.interior_contains(sign > 0 ? diff : -diff)) {
        keep[v] = false;
        break;
      }
    }
  }
  PointSet out(m.dim, {});
  for (std::size_t i = 0; i < m.size(); ++i)
    if (keep[i]) out.points.push_back(m.points[i]);
  return out;
}

}  // namespace

PointSet wmax(const PointSet& m, const Cone& k) { return undominated(m, k, +1); }

PointSet wmin(const PointSet& m, const Cone& k) { return undominated(m, k, -1); }

std::optional<Vec> smax(const PointSet& m, const Cone& k) {
  check_inputs(m, k);
  const Vec w = positive_functional(k);
  Rational best = dot(w, m.points.front());
  for (const auto& p : m.points) best = std::max(best, dot(w, p));
  for (const auto& cand : m.points) {
    if (dot(w, cand) != best) continue;
    const bool dominates_all = std::all_of(m.points.begin(), m.points.end(),
                                           [&](const Vec& u) { return k.contains(cand - u); });
    if (dominates_all) return cand;
  }
  return std::nullopt;
}

bool wsup_finite_contains(const PointSet& m, const Cone& k, const Vec& y) {
  check_inputs(m, k);
  require_dim(y, m.dim, "query point");
  // A finite M never satisfies "every ṽ is strictly below some v ∈ M", since
  // M − int K is a finite union of translated open cones and misses points
  // far in direction k0 ∈ int K. So WSup M ≠ {+∞} and the closure formula applies.
  bool in_closure = false;
  for (const auto& v : m.points) {
    const Vec d = v - y;
    if (k.interior_contains(d)) return false;
    if (!in_closure && k.contains(d)) in_closure = true;
  }
  return in_closure;
}

bool winf_finite_contains(const PointSet& m, const Cone& k, const Vec& y) {
  PointSet neg(m.dim, {});
  for (const auto& p : m.points) neg.points.push_back(-p);
  return wsup_finite_contains(neg, k, -y);
}

bool in_L_plus(const Matrix& t, const Cone& s, const Cone& k) {
  if (t.rows() != k.dim() || t.cols() != s.dim()) throw DimensionError("T must map S's space into K's space");
  const auto& gens = s.generators();
  return std::all_of(gens.begin(), gens.end(), [&](const Vec& g) { return k.contains(t * g); });
}

bool in_L_plus_lp(const Matrix& t, const Cone& s, const Cone& k) {
  if (t.rows() != k.dim() || t.cols() != s.dim()) throw DimensionError("T must map S's space into K's space");
  const Matrix kt = k.facet_matrix() * t;
  for (std::size_t j = 0; j < kt.rows(); ++j) {
    LinearProgram lp(s.dim());
    for (const auto& a : s.facets()) lp.add_constraint(a, Sense::GreaterEq, Rational(0));
    lp.add_constraint(kt.row(j), Sense::LessEq, Rational(-1));
    if (lp.find_feasible_point()) return false;
  }
  return true;
}

bool in_L_plus_weak(const Matrix& t, const Cone& s, const Cone& k) {
  if (t.rows() != k.dim() || t.cols() != s.dim()) throw DimensionError("T must map S's space into K's space");
  require_ordering_cone(k, "K");
  // T s ∈ −int K for some s ∈ S iff, by homogeneity, ⟨a_j, T s⟩ <= −1 for all j.
  LinearProgram lp(s.dim());
  for (const auto& a : s.facets()) lp.add_constraint(a, Sense::GreaterEq, Rational(0));
  const Matrix kt = k.facet_matrix() * t;
  for (std::size_t j = 0; j < kt.rows(); ++j) lp.add_constraint(kt.row(j), Sense::LessEq, Rational(-1));
  return !lp.find_feasible_point().has_value();
}

WSupResult wsup_cone_image(const Matrix& t, const Cone& s, const Cone& k) {
  if (!in_L_plus_weak(t, s, k)) return WSupResult::infinite();
  // P = T(−S) is a closed polyhedral cone, so cl(P − int K) = P − K.
  return WSupResult::oracle([t, s, k](const Vec& y) {
    require_dim(y, k.dim(), "WSup query");
    const Matrix kt = k.facet_matrix() * t;
    const std::size_t p = s.dim();
    // y ∈ P − K: ∃ s ∈ S with −T s − y ∈ K.
    LinearProgram closure(p);
    for (const auto& a : s.facets()) closure.add_constraint(a, Sense::GreaterEq, Rational(0));
    for (std::size_t j = 0; j < kt.rows(); ++j)
      closure.add_constraint(-kt.row(j), Sense::GreaterEq, dot(k.facets()[j], y));
    if (!closure.find_feasible_point()) return false;
    // y ∉ P − int K: no s ∈ S with ⟨a_j, −T s − y⟩ > 0 for all j.
    StrictSystem open(p);
    for (const auto& a : s.facets()) open.add_weak(-a, Rational(0));
    for (std::size_t j = 0; j < kt.rows(); ++j) open.add_strict(kt.row(j), -dot(k.facets()[j], y));
    return !solve_strict(open).has_value();
  });
}

DomClassification classify_dom(const Matrix& t, const Cone& s, const Cone& k) {
  DomClassification out;
  out.in_dom = in_L_plus_weak(t, s, k);
  out.in_dom_m = in_L_plus(t, s, k);
  if (out.in_dom_m) {
    const auto wsup = wsup_cone_image(t, s, k);
    // T ∈ L₊ gives T(−S) ⊂ −K, hence WSup T(−S) ⊂ −K and 0 dominates it.
    out.smax_is_zero = !wsup.is_infinite() && wsup.contains(zeros(k.dim()));
  }
  return out;
}

}  // namespace wvo
