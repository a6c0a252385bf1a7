#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "minkgeo/circle_path.hpp"
#include "minkgeo/convex_curve.hpp"
#include "minkgeo/plane.hpp"

namespace minkgeo {

/// Circular curvature of a smooth convex curve in a smooth plane.
///
/// The support parameter t(s) maps arc length s on the curve to arc length
/// on the unit circle so that the unit tangent of the curve at s equals the
/// circle tangent at t(s) (a monotone correspondence for strictly convex
/// pairs).  Curvature is k = t'(s); its reciprocal is the radius of the
/// osculating Minkowski circle.
class CurvatureProfile {
 public:
  double curve_length() const { return l_; }
  double circle_length() const { return L_; }

  /// Uniform arc-length grid s_i = i*l/n, i = 0..n-1.
  const std::vector<double>& s_grid() const { return s_; }
  /// Matched circle parameter t(s_i), lifted to be increasing.
  const std::vector<double>& circle_params() const { return t_; }
  const std::vector<double>& curvature() const { return k_; }
  /// 1/k, +infinity where |k| falls below the flatness threshold.
  const std::vector<double>& radius() const { return rho_; }

  double curvature_at(double s) const;
  double radius_at(double s) const;

  /// Euclidean angle of the outward normal at arc length s, lifted so that
  /// one loop advances it by 2*pi.
  double normal_angle_at(double s) const;
  /// Arc length where the outward normal points along angle psi; inverse of
  /// normal_angle_at modulo one loop.
  double param_of_normal(double psi) const;

  static constexpr double kFlatThreshold = 1e-9;

 private:
  friend CurvatureProfile curvature_profile(const NormedPlane&,
                                            const ConvexCurve&,
                                            const ArcLengthPath&);
  double l_ = 0.0, L_ = 0.0;
  std::vector<double> s_, t_, k_, rho_;
  std::vector<double> psi_;    // dense normal angles, uniform, 0..2*pi
  std::vector<double> s_psi_;  // arc length at psi_[j]
};

/// Builds the full profile at the path's resolution.  Throws
/// std::domain_error for polygonal curves or polygonal norms, pointing the
/// caller at smooth_approximate.
CurvatureProfile curvature_profile(const NormedPlane& plane,
                                   const ConvexCurve& curve,
                                   const ArcLengthPath& path);

/// (k, rho) at a single arc length s on the curve.
std::pair<double, double> circular_curvature(const NormedPlane& plane,
                                             const ConvexCurve& curve,
                                             const ArcLengthPath& path,
                                             double s);

}  // namespace minkgeo
