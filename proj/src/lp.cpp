#include "wvo/lp.hpp"

#include <limits>

namespace wvo {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense simplex tableau in canonical form with respect to `basis`.
struct Tableau {
  std::size_t cols = 0;     // columns excluding the rhs
  std::vector<Vec> rows;    // each row has cols + 1 entries, rhs last
  std::vector<std::size_t> basis;
  Vec cost;                 // reduced costs; cost[cols] holds minus the objective value
  std::vector<bool> allowed;

  void pivot(std::size_t r, std::size_t c) {
    Vec& pr = rows[r];
    const Rational inv = 1 / pr[c];
    for (auto& v : pr)
      if (v != 0) v *= inv;
    auto eliminate = [&](Vec& target) {
      if (target[c] == 0) return;
      const Rational f = target[c];
      for (std::size_t j = 0; j <= cols; ++j)
        if (pr[j] != 0) target[j] -= f * pr[j];
    };
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r) eliminate(rows[i]);
    eliminate(cost);
    basis[r] = c;
  }

  // Minimizes with Bland's rule. Returns false when unbounded.
  bool run() {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < cols; ++j)
        if (allowed[j] && cost[j] < 0) {
          enter = j;
          break;
        }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        Rational ratio = rows[i][cols] / rows[i][enter];
        if (leave == kNone || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }

  void load_cost(const Vec& c) {
    cost = c;
    cost.resize(cols + 1, Rational(0));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational cb = c[basis[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols; ++j)
        if (rows[i][j] != 0) cost[j] -= cb * rows[i][j];
    }
  }
};

}  // namespace

LinearProgram::LinearProgram(std::size_t num_vars)
    : num_vars_(num_vars), nonneg_(num_vars, false), objective_(zeros(num_vars)) {}

void LinearProgram::set_nonnegative(std::size_t var) { nonneg_.at(var) = true; }

void LinearProgram::set_all_nonnegative() { nonneg_.assign(num_vars_, true); }

void LinearProgram::add_constraint(Vec coeffs, Sense sense, Rational rhs) {
  require_dim(coeffs, num_vars_, "LP constraint");
  rows_.push_back({std::move(coeffs), sense, std::move(rhs)});
}

void LinearProgram::maximize(Vec objective) {
  require_dim(objective, num_vars_, "LP objective");
  objective_ = std::move(objective);
  maximize_ = true;
}

void LinearProgram::minimize(Vec objective) {
  require_dim(objective, num_vars_, "LP objective");
  objective_ = std::move(objective);
  maximize_ = false;
}

LpResult LinearProgram::solve() const {
  // Column layout: split free variables, then one slack per inequality, then artificials.
  std::vector<std::size_t> plus(num_vars_), minus(num_vars_, kNone);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < num_vars_; ++j) {
    plus[j] = cols++;
    if (!nonneg_[j]) minus[j] = cols++;
  }
  std::vector<std::size_t> slack(rows_.size(), kNone);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i].sense != Sense::Equal) slack[i] = cols++;
  const std::size_t first_artificial = cols;

  Tableau tab;
  std::vector<Vec> body;
  std::vector<std::size_t> basis;
  std::vector<bool> needs_artificial(rows_.size(), false);
  std::size_t artificials = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Row& r = rows_[i];
    Vec row(cols + 1);
    for (std::size_t j = 0; j < num_vars_; ++j) {
      row[plus[j]] = r.coeffs[j];
      if (minus[j] != kNone) row[minus[j]] = -r.coeffs[j];
    }
    if (slack[i] != kNone) row[slack[i]] = r.sense == Sense::LessEq ? 1 : -1;
    row[cols] = r.rhs;
    if (row[cols] < 0)
      for (auto& v : row) v = -v;
    if (slack[i] != kNone && row[slack[i]] == 1) {
      basis.push_back(slack[i]);
    } else {
      basis.push_back(kNone);
      needs_artificial[i] = true;
      ++artificials;
    }
    body.push_back(std::move(row));
  }
  const std::size_t total = cols + artificials;
  std::size_t next = first_artificial;
  for (std::size_t i = 0; i < body.size(); ++i) {
    Rational rhs = body[i][cols];
    body[i].resize(total + 1, Rational(0));
    body[i][cols] = 0;
    body[i][total] = rhs;
    if (needs_artificial[i]) {
      body[i][next] = 1;
      basis[i] = next++;
    }
  }
  tab.cols = total;
  tab.rows = std::move(body);
  tab.basis = std::move(basis);
  tab.allowed.assign(total, true);

  if (artificials > 0) {
    Vec phase1 = zeros(total);
    for (std::size_t j = first_artificial; j < total; ++j) phase1[j] = 1;
    tab.load_cost(phase1);
    tab.run();
    if (tab.cost[total] != 0) return {LpStatus::Infeasible, {}, {}};
    std::vector<bool> drop(tab.rows.size(), false);
    for (std::size_t i = 0; i < tab.rows.size(); ++i) {
      if (tab.basis[i] < first_artificial) continue;
      std::size_t j = 0;
      while (j < first_artificial && tab.rows[i][j] == 0) ++j;
      if (j < first_artificial)
        tab.pivot(i, j);
      else
        drop[i] = true;
    }
    std::vector<Vec> kept_rows;
    std::vector<std::size_t> kept_basis;
    for (std::size_t i = 0; i < tab.rows.size(); ++i) {
      if (drop[i]) continue;
      kept_rows.push_back(std::move(tab.rows[i]));
      kept_basis.push_back(tab.basis[i]);
    }
    tab.rows = std::move(kept_rows);
    tab.basis = std::move(kept_basis);
    for (std::size_t j = first_artificial; j < total; ++j) tab.allowed[j] = false;
  }

  Vec c = zeros(total);
  for (std::size_t j = 0; j < num_vars_; ++j) {
    const Rational cj = maximize_ ? Rational(-objective_[j]) : objective_[j];
    c[plus[j]] = cj;
    if (minus[j] != kNone) c[minus[j]] = -cj;
  }
  tab.load_cost(c);
  if (!tab.run()) return {LpStatus::Unbounded, {}, {}};

  Vec std_x = zeros(total);
  for (std::size_t i = 0; i < tab.rows.size(); ++i) std_x[tab.basis[i]] = tab.rows[i][total];
  Vec x(num_vars_);
  for (std::size_t j = 0; j < num_vars_; ++j) {
    x[j] = std_x[plus[j]];
    if (minus[j] != kNone) x[j] -= std_x[minus[j]];
  }
  LpResult res;
  res.status = LpStatus::Optimal;
  res.value = dot(objective_, x);
  res.x = std::move(x);
  return res;
}

std::optional<Vec> LinearProgram::find_feasible_point() const {
  LinearProgram copy = *this;
  copy.minimize(zeros(num_vars_));
  auto res = copy.solve();
  if (res.status != LpStatus::Optimal) return std::nullopt;
  return res.x;
}

std::optional<Vec> solve_strict(const StrictSystem& sys) {
  const std::size_t n = sys.num_vars;
  const bool has_strict = !sys.strict.empty();
  LinearProgram lp(has_strict ? n + 1 : n);
  auto extend = [&](const Vec& a, bool with_slack) {
    require_dim(a, n, "strict system row");
    Vec row = a;
    if (has_strict) row.push_back(with_slack ? Rational(1) : Rational(0));
    return row;
  };
  for (auto j : sys.nonnegative) lp.set_nonnegative(j);
  for (const auto& [a, b] : sys.strict) lp.add_constraint(extend(a, true), Sense::LessEq, b);
  for (const auto& [a, b] : sys.weak) lp.add_constraint(extend(a, false), Sense::LessEq, b);
  for (const auto& [a, b] : sys.equal) lp.add_constraint(extend(a, false), Sense::Equal, b);
  if (!has_strict) return lp.find_feasible_point();

  Vec cap = zeros(n + 1);
  cap[n] = 1;
  lp.add_constraint(cap, Sense::LessEq, Rational(1));
  lp.maximize(cap);
  auto res = lp.solve();
  if (res.status != LpStatus::Optimal || res.value <= 0) return std::nullopt;
  res.x.pop_back();
  return res.x;
}

}  // namespace wvo
