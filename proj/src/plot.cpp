#include "wvo/plot.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace wvo::plot {

namespace {

void require_plane(std::size_t dim) {
  if (dim != 2) throw UnsupportedDimension("plot data unavailable for dimension " + std::to_string(dim));
}

// Open interval {t : ⟨a_j, d + t r⟩ > 0 ∀j}; nullopt bounds mean ±∞, nothing means empty.
struct Open {
  std::optional<Rational> lo, hi;
};

std::optional<Open> interior_interval(const Cone& k, const Vec& d, const Vec& r) {
  Open o;
  for (const auto& a : k.facets()) {
    const Rational c0 = dot(a, d);
    const Rational c1 = dot(a, r);
    if (c1 == 0) {
      if (c0 <= 0) return std::nullopt;
      continue;
    }
    const Rational root = -c0 / c1;
    if (c1 > 0) {
      if (!o.lo || root > *o.lo) o.lo = root;
    } else if (!o.hi || root < *o.hi) {
      o.hi = root;
    }
  }
  if (o.lo && o.hi && *o.lo >= *o.hi) return std::nullopt;
  return o;
}

std::string num(const Rational& r) {
  std::ostringstream s;
  s.precision(12);
  s << to_double(r);
  return s.str();
}

}  // namespace

std::vector<RayPiece> wsup_pieces(const PointSet& m, const Cone& k, const Rational& extent) {
  require_plane(m.dim);
  if (m.empty()) throw PreconditionError("point set is empty");
  if (k.dim() != 2) throw DimensionError("point set and cone dimensions differ");
  require_ordering_cone(k, "ordering cone");
  if (extent <= 0) throw PreconditionError("plot extent must be positive");
  std::vector<RayPiece> out;
  for (const auto& v : m.points)
    for (const auto& r : k.generators()) {
      // Remove t >= 0 with u − (v − t r) ∈ int K for some u ∈ M.
      std::vector<Open> cuts;
      for (const auto& u : m.points)
        if (auto o = interior_interval(k, u - v, r)) cuts.push_back(*o);
      std::sort(cuts.begin(), cuts.end(), [](const Open& a, const Open& b) {
        if (!a.lo) return b.lo.has_value();
        return b.lo && *a.lo < *b.lo;
      });
      Rational start = 0;
      bool open_end = false;  // the remaining part runs to +∞
      bool done = false;
      for (const auto& c : cuts) {
        if (!c.lo || *c.lo < start) {
          // Cut covers `start` unless it ends at or before it.
          if (!c.hi) {
            done = true;
            break;
          }
          if (*c.hi > start) start = *c.hi;
          continue;
        }
        out.push_back({v, r, start, *c.lo, true});
        if (!c.hi) {
          done = true;
          break;
        }
        start = *c.hi;
      }
      if (!done) open_end = true;
      if (open_end) out.push_back({v, r, start, std::max(start, extent), false});
    }
  return out;
}

std::string wsup_polylines_csv(const PointSet& m, const Cone& k, const Rational& extent) {
  const auto pieces = wsup_pieces(m, k, extent);
  std::ostringstream s;
  s << "polyline,vertex,y1,y2,bounded\n";
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& p = pieces[i];
    const Vec a = p.apex - p.t_lo * p.ray;
    const Vec b = p.apex - p.t_hi * p.ray;
    s << i << ",0," << num(a[0]) << ',' << num(a[1]) << ',' << (p.bounded ? 1 : 0) << '\n';
    s << i << ",1," << num(b[0]) << ',' << num(b[1]) << ',' << (p.bounded ? 1 : 0) << '\n';
  }
  return s.str();
}

std::string wmax_csv(const PointSet& m, const Cone& k) {
  require_plane(m.dim);
  const auto w = wmax(m, k);
  std::ostringstream s;
  s << "y1,y2\n";
  for (const auto& p : w.points) s << to_string(p[0]) << ',' << to_string(p[1]) << '\n';
  return s.str();
}

std::string membership_grid_csv(const std::vector<Vec>& points, const std::function<bool(const Vec&)>& member) {
  if (points.empty()) throw PreconditionError("membership grid is empty");
  std::ostringstream s;
  s << "y1,y2,member\n";
  for (const auto& p : points) {
    require_plane(p.size());
    s << to_string(p[0]) << ',' << to_string(p[1]) << ',' << (member(p) ? 1 : 0) << '\n';
  }
  return s.str();
}

}  // namespace wvo::plot
