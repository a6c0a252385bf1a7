#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "minkgeo/convex_curve.hpp"
#include "minkgeo/plane.hpp"
#include "minkgeo/unit_ball.hpp"

namespace minkgeo {

/// Recipe for a constant-width curve: Minkowski support prescribed on the
/// arc-length parameter of the unit circle as
///   h(u) = width/2 + sum_k a_k cos(2*pi*k*u / L),   k odd,
/// so that h(u) + h(u + L/2) = width holds identically.
struct WidthSynthesisSpec {
  double width = 1.0;
  std::vector<std::pair<int, double>> harmonics;      // (odd k >= 1, a_k) cosine
  std::vector<std::pair<int, double>> sin_harmonics;  // (odd k >= 1, b_k) sine
  std::size_t n = 4096;
};

/// Builds a curve of constant Minkowski width in a Radon-normalized plane.
/// Smooth planes yield a support-function curve; polygonal planes yield the
/// exact halfplane-intersection polygon over the ball's edge normals.
/// Throws std::invalid_argument for even harmonics or a non-normalized
/// plane, std::domain_error when the prescription is not convex (the message
/// names the offending parameter interval).
ConvexCurve build_constant_width_curve(const NormedPlane& plane,
                                       const WidthSynthesisSpec& spec);

/// Completes a convex quarter arc from (1,0) to (0,1) to a full Radon ball
/// (arc + rotated polar arc + reflections) and returns the plane with omega
/// rescaled so that anti-norm and norm coincide.
NormedPlane build_radon_plane(const std::vector<Vec2>& arc);

/// C2-like strictly convex approximation within Hausdorff distance epsilon:
/// the Euclidean support function is convolved with a positive periodic
/// kernel (width shrunk adaptively until the perturbation fits the budget)
/// and then inflated by epsilon/2, which bounds every curvature radius below
/// by epsilon/2.  Origin symmetry is preserved.  A glued Radon ball is
/// smoothed through its generator arc and re-glued, so the result is again
/// exactly Radon at the price of staying polygonal (densely sampled).
BallPtr smooth_approximate(const BallPtr& ball, double epsilon);
ConvexCurve smooth_approximate(const ConvexCurve& curve, double epsilon);

/// sup over n angles of |h_A - h_B|: Hausdorff distance between convex
/// bodies via support functions.
double support_hausdorff(const UnitBall& a, const UnitBall& b,
                         std::size_t n = 4096);
double support_hausdorff(const ConvexCurve& a, const ConvexCurve& b,
                         std::size_t n = 4096);

}  // namespace minkgeo
