#pragma once

#include <cstddef>
#include <utility>

#include "minkgeo/circle_path.hpp"
#include "minkgeo/convex_curve.hpp"
#include "minkgeo/plane.hpp"

namespace minkgeo {

/// Curve length in the plane's norm: exact edge sums for polylines, chord
/// sums over max(4n, 16384) boundary samples for smooth curves.
double curve_length(const NormedPlane& plane, const ConvexCurve& curve,
                    std::size_t n = 4096);

/// Curve length in the anti-norm.
double curve_length_antinorm(const NormedPlane& plane, const ConvexCurve& curve,
                             std::size_t n = 4096);

struct DiameterResult {
  double value = 0.0;
  Vec2 a, b;  // a pair of boundary points attaining it
};

/// Largest norm distance between two points of the curve.  The maximum over
/// a convex body is attained at an antipodal vertex pair of its (sampled)
/// boundary polygon, which is what gets enumerated.
DiameterResult diameter(const NormedPlane& plane, const ConvexCurve& curve,
                        std::size_t n = 4096);

/// Same with distances measured in the anti-norm.
DiameterResult diameter_antinorm(const NormedPlane& plane,
                                 const ConvexCurve& curve,
                                 std::size_t n = 4096);

/// Support function of the curve with respect to the plane, evaluated at the
/// unit-circle arc-length parameter u: the factor by which the support line
/// of the circle at phi(u) must be pushed out to touch the curve.  Computed
/// as omega(gamma*, phi') / omega(phi, phi') with gamma* the curve point
/// whose outward normal matches the circle's at phi(u).
double minkowski_support(const NormedPlane& plane, const ConvexCurve& curve,
                         const ArcLengthPath& path, double u);

/// Residual of reassembling a curve point from the moving basis
/// (phi(u), phi'(u)): gamma* should equal
/// [omega(gamma*, phi') phi - omega(gamma*, phi) phi'] / omega(phi, phi').
/// The identity is exact linear algebra, so the residual reported (max over
/// the path grid, relative to the curve scale) measures only floating-point
/// noise and parametrization quality.
double support_decomposition_residual(const NormedPlane& plane,
                                      const ConvexCurve& curve,
                                      const ArcLengthPath& path);

/// Width of the curve in direction v, measured in the norm: the norm
/// distance between the two supporting lines with normal v, i.e.
/// (h_K(v) + h_K(-v)) / h_B(v) with Euclidean support functions h.
double width_in_direction(const NormedPlane& plane, const ConvexCurve& curve,
                          Vec2 v);

/// Width across the support line touching at circle parameter u:
/// minkowski_support at u plus at the antipodal parameter u + L/2.
double width_at_param(const NormedPlane& plane, const ConvexCurve& curve,
                      const ArcLengthPath& path, double u);

/// Sweeps n_dirs directions; constant width iff (max - min) width stays
/// below tol times the mean.  Returns the verdict and the mean width.
std::pair<bool, double> is_constant_width(const NormedPlane& plane,
                                          const ConvexCurve& curve,
                                          std::size_t n_dirs = 360,
                                          double tol = 1e-3);

}  // namespace minkgeo
