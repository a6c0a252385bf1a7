#pragma once

#include <memory>
#include <string>
#include <vector>

#include "minkgeo/plane.hpp"

namespace minkgeo {

/// Arc-length parametrization phi of the unit circle in its own norm:
/// ||phi(u)|| = 1, ||phi'(u)|| = 1, counterclockwise, phi(0) at boundary
/// parameter 0.  Built from a dense boundary polyline sampled by the ball's
/// boundary parameter (with polygon corners merged into the sampling, so
/// polygon perimeters are exact), cumulative norm lengths, and a monotone
/// piecewise-linear inversion onto a uniform arc-length grid.
class ArcLengthPath {
 public:
  ArcLengthPath(BallPtr ball, std::size_t n);

  std::size_t resolution() const { return n_; }
  double total_length() const { return length_; }

  /// Grid values u_i = i * L / n for i = 0..n (the last row closes the loop).
  const std::vector<double>& params() const { return u_; }
  const std::vector<Vec2>& points() const { return pts_; }
  /// Unit-norm forward tangents at the grid points (one-sided, forward
  /// convention at polygon corners).
  const std::vector<Vec2>& tangents() const { return tan_; }

  /// Boundary parameter t of the point at arc length u (u is wrapped).
  double boundary_param_at(double u) const;
  /// Arc length accumulated up to boundary parameter t in [0, 2*pi].
  double length_at_boundary_param(double t) const;

  Vec2 point_at(double u) const;
  /// Exact tangent direction normalized to unit norm.
  Vec2 tangent_at(double u) const;

  /// Twice the sector area swept by the full loop (the dense polyline's
  /// enclosed area, doubled).
  double twice_area() const { return twice_area_; }

  const UnitBall& ball() const { return *ball_; }
  BallPtr ball_ptr() const { return ball_; }
  std::string ball_fingerprint() const { return ball_->fingerprint(); }

 private:
  BallPtr ball_;
  std::size_t n_;
  double length_ = 0.0;
  double twice_area_ = 0.0;
  std::vector<double> u_;
  std::vector<Vec2> pts_;
  std::vector<Vec2> tan_;
  std::vector<double> dense_t_;    // boundary params, 0 .. 2*pi
  std::vector<double> dense_len_;  // cumulative norm length, 0 .. L
};

using PathPtr = std::shared_ptr<const ArcLengthPath>;

/// Builds (or fetches from the ball's cache, for the plane's default
/// resolution) the arc-length parametrization with n >= 64 grid points.
PathPtr parametrize_unit_circle(const NormedPlane& plane, std::size_t n = 4096);

/// Norm length of the unit circle.  Gives the same value for any omega
/// scale; lies in [6, 8] for every norm.
double circle_perimeter(const NormedPlane& plane, std::size_t n = 4096);

/// Anti-norm length of the unit circle.
double circle_perimeter_antinorm(const NormedPlane& plane,
                                 std::size_t n = 4096);

/// max_i | omega(phi(u_i), phi'(u_i)) - 1 | over the grid.  Zero (to
/// tolerance) exactly when the plane is Radon-normalized.
double kepler_deviation(const NormedPlane& plane, const ArcLengthPath& path);

}  // namespace minkgeo
