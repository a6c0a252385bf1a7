#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "minkgeo/convex_polygon.hpp"
#include "minkgeo/periodic_spline.hpp"
#include "minkgeo/vec2.hpp"

namespace minkgeo {

/// Origin-symmetric convex unit ball, the data behind a norm.  Immutable;
/// all evaluators are const and safe to call concurrently.
///
/// The boundary is exposed through a single counterclockwise parameter t
/// with period 2*pi.  For radial representations t is the Euclidean angle
/// of the boundary point; for support-function representations t is the
/// angle of the outward normal.  Either way boundary_point(t) walks the
/// boundary once per period and boundary_tangent(t) points forward.
class UnitBall {
 public:
  virtual ~UnitBall() = default;

  /// Minkowski functional: inf { s > 0 : v/s inside the ball }.
  virtual double gauge(Vec2 v) const = 0;

  /// Euclidean support function sup { <x, u> : x in ball }, homogeneous in u.
  virtual double support(Vec2 u) const = 0;

  virtual Vec2 boundary_point(double t) const = 0;

  /// Forward (counterclockwise) tangent direction at boundary_point(t);
  /// magnitude unspecified.  At a polygon vertex this is the outgoing edge.
  virtual Vec2 boundary_tangent(double t) const = 0;

  /// Euclidean angle of the outward normal at boundary_point(t).  Monotone
  /// in t modulo 2*pi; piecewise constant for polygons.
  virtual double normal_angle(double t) const = 0;

  /// True when the boundary is curvature-grade (C2-like and strictly
  /// convex); false for polygons.
  virtual bool smooth() const = 0;
  bool polygonal() const { return !smooth(); }

  /// Boundary parameters that straddle corners and must appear in any dense
  /// sampling (polygon vertex angles, in [0, 2*pi)).  Empty for smooth balls.
  virtual std::vector<double> boundary_breaks() const { return {}; }

  /// Polar dual body { y : <x, y> <= 1 for all x in ball }.
  virtual std::shared_ptr<const UnitBall> polar() const = 0;

  /// Short human-readable tag, e.g. "lp(p=4)" or "polygon[6]".
  virtual std::string describe() const = 0;

  /// describe() plus a hash of the defining data.
  std::string fingerprint() const;

 protected:
  virtual std::uint64_t data_hash() const = 0;

 private:
  // Slot for the lazily built default unit-circle parametrization; owned by
  // the path module, typed void here to avoid a header cycle.
  friend struct PathCacheAccess;
  mutable std::mutex cache_mu_;
  mutable std::shared_ptr<const void> cached_path_;
  mutable std::size_t cached_path_n_ = 0;
};

using BallPtr = std::shared_ptr<const UnitBall>;

/// lp ball { |x|^p + |y|^p <= scale^p }, p in (1, 1e6].  p = 1 is routed to
/// a polygon by make_lp_ball.
class LpBall final : public UnitBall {
 public:
  LpBall(double p, double scale);

  double gauge(Vec2 v) const override;
  double support(Vec2 u) const override;
  Vec2 boundary_point(double t) const override;
  Vec2 boundary_tangent(double t) const override;
  double normal_angle(double t) const override;
  bool smooth() const override { return true; }
  std::shared_ptr<const UnitBall> polar() const override;
  std::string describe() const override;

  double p() const { return p_; }
  double scale() const { return scale_; }
  double dual_exponent() const { return q_; }

 protected:
  std::uint64_t data_hash() const override;

 private:
  Vec2 outward_normal(Vec2 on_boundary) const;
  double p_, q_, scale_;
};

/// Polygonal ball.  Exact cone arithmetic for the gauge and exact vertex
/// maximization for the support function.
class PolygonBall : public UnitBall {
 public:
  explicit PolygonBall(std::vector<Vec2> full_vertex_loop);

  double gauge(Vec2 v) const override;
  double support(Vec2 u) const override;
  Vec2 boundary_point(double t) const override;
  Vec2 boundary_tangent(double t) const override;
  double normal_angle(double t) const override;
  bool smooth() const override { return false; }
  std::vector<double> boundary_breaks() const override;
  std::shared_ptr<const UnitBall> polar() const override;
  std::string describe() const override;

  const ConvexPolygon& geometry() const { return poly_; }

 protected:
  std::uint64_t data_hash() const override;

 private:
  ConvexPolygon poly_;
};

/// Ball glued from a strictly convex quarter arc between (1,0) and (0,1):
/// the second quadrant carries the quarter-turned polar arc, the rest is the
/// reflection through the origin.  The result is a Radon ball (Birkhoff
/// orthogonality is symmetric) for any such arc.
class RadonGlueBall final : public PolygonBall {
 public:
  RadonGlueBall(std::vector<Vec2> glued, std::vector<Vec2> arc);

  std::string describe() const override;
  const std::vector<Vec2>& generator_arc() const { return arc_; }

 private:
  std::vector<Vec2> arc_;
};

/// Smooth ball given by its Euclidean support function on a uniform angle
/// grid, interpolated with a periodic cubic spline.  Boundary points come
/// from the envelope formula x(t) = h(t) u(t) + h'(t) u'(t); the parameter t
/// is the outward normal angle.
class SmoothBall final : public UnitBall {
 public:
  /// Uniform samples h_k = h(2*pi*k/N).  Must be positive, origin-symmetric
  /// (h(t) = h(t+pi)) within 1e-6 relative, and convex: h + h'' >= margin.
  explicit SmoothBall(std::vector<double> uniform_support_samples);

  double gauge(Vec2 v) const override;
  double support(Vec2 u) const override;
  Vec2 boundary_point(double t) const override;
  Vec2 boundary_tangent(double t) const override;
  double normal_angle(double t) const override { return t; }
  bool smooth() const override { return true; }
  std::shared_ptr<const UnitBall> polar() const override;
  std::string describe() const override;

  const PeriodicSpline& support_spline() const { return h_; }

  /// Parameter of the boundary point on the ray through v (the support
  /// angle t with boundary_point(t) parallel to v).
  double ray_param(Vec2 v) const;

 protected:
  std::uint64_t data_hash() const override;

 private:
  PeriodicSpline h_;
};

// ---- factories -----------------------------------------------------------

/// lp ball; p = 1 yields the diamond as a polygon so that corner handling
/// stays exact.  Throws for p < 1.
BallPtr make_lp_ball(double p, double scale = 1.0);

/// Polygon ball from a counterclockwise vertex list.  A full origin-symmetric
/// loop is used as-is; otherwise the list is treated as one half and the
/// antipodes are appended.
BallPtr make_polygon_ball(std::vector<Vec2> vertices);

/// Smooth ball from Euclidean support samples at strictly increasing angles
/// in [0, 2*pi).  Resampled onto a uniform grid and symmetrized; rejected if
/// asymmetric beyond 1e-6 relative or not strictly convex.
BallPtr make_support_ball(const std::vector<double>& angles,
                          const std::vector<double>& values);

/// Smooth ball from a support-function callable, sampled on a uniform grid.
BallPtr make_smooth_ball(const std::function<double(double)>& h,
                         std::size_t grid = 4096);

/// Radon ball glued from a quarter arc; see RadonGlueBall.  The arc must run
/// from (1,0) to (0,1) inside the closed first quadrant, convex, with at
/// least 2 points.
BallPtr make_radon_glue_ball(std::vector<Vec2> arc);

/// Sorted boundary parameters covering [0, 2*pi] once: a uniform grid of at
/// least n_base points with the ball's break parameters merged in, first
/// element 0, last element exactly 2*pi.
std::vector<double> boundary_params(const UnitBall& ball, std::size_t n_base);

std::uint64_t fnv1a64(const void* data, std::size_t bytes, std::uint64_t seed);

}  // namespace minkgeo
