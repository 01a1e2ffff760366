#pragma once

#include "wvo/cone.hpp"
#include "wvo/order.hpp"

#include <functional>
#include <string>
#include <vector>

namespace wvo::plot {

/// Closed segment v − t r for t in [t_lo, t_hi]; `bounded` is false when the piece
/// continues to infinity and t_hi is only the display cutoff.
struct RayPiece {
  Vec apex;
  Vec ray;
  Rational t_lo;
  Rational t_hi;
  bool bounded = true;
};

/// Pieces of WSup M for a finite M ⊂ Q² under a pointed solid K ⊂ Q²: the boundary
/// rays v − t r (r an extreme ray of K) with the open stretches lying in M − int K removed.
/// Unbounded pieces are cut at t = extent. Throws for dimensions other than 2 and empty M.
std::vector<RayPiece> wsup_pieces(const PointSet& m, const Cone& k, const Rational& extent);

/// CSV "polyline,vertex,y1,y2,bounded" with one polyline per piece.
std::string wsup_polylines_csv(const PointSet& m, const Cone& k, const Rational& extent = 4);

/// CSV "y1,y2" listing WMax M.
std::string wmax_csv(const PointSet& m, const Cone& k);

/// CSV "y1,y2,member" over the given 2-D sample points.
std::string membership_grid_csv(const std::vector<Vec>& points, const std::function<bool(const Vec&)>& member);

}  // namespace wvo::plot
