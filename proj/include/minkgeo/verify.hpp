#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "minkgeo/circle_path.hpp"
#include "minkgeo/convex_curve.hpp"
#include "minkgeo/plane.hpp"

namespace minkgeo {

/// One verified claim instance.  slack = bound - lhs; for claims that are
/// theorems, slack must stay >= -tol*bound, and violations surface as
/// failing reports, never as clamped numbers.
struct VerificationReport {
  std::string claim;  // RS_RADON, RS_ANTINORM, RS_DUAL, BARBIER,
                      // CURVATURE_SUM, DEFECT_INTEGRAL
  std::string plane;  // plane fingerprint
  std::string curve;  // curve fingerprint
  double lhs = 0.0;
  double bound = 0.0;
  double slack = 0.0;
  bool equality = false;
  std::size_t n = 0;
  double tol = 0.0;
  std::uint64_t seed = 0;

  bool holds() const { return slack >= -tol * std::fabs(bound); }
};

/// l(curve) <= diam * l(S)/2 on Radon planes; equality marks constant
/// width.  Throws std::domain_error on non-Radon planes, pointing to
/// verify_antinorm_bound.  The plane is Radon-normalized internally.
VerificationReport verify_rosenthal_szasz(const NormedPlane& plane,
                                          const ConvexCurve& curve,
                                          std::size_t n = 4096,
                                          double tol = 1e-3);

/// l_a(curve) <= diam * l_a(S)/2 in any plane (diameter in the norm).
VerificationReport verify_antinorm_bound(const NormedPlane& plane,
                                         const ConvexCurve& curve,
                                         std::size_t n = 4096,
                                         double tol = 1e-3);

/// l(curve) <= diam_a * l(S)/2; equality marks constant width in the
/// anti-norm plane.
VerificationReport verify_dual_bound(const NormedPlane& plane,
                                     const ConvexCurve& curve,
                                     std::size_t n = 4096, double tol = 1e-3);

/// |l(curve) - d * l(S)/2| <= tol * bound for constant-width curves on
/// Radon planes.  Throws std::domain_error when the curve is not constant
/// width or the plane is not Radon.
VerificationReport verify_barbier(const NormedPlane& plane,
                                  const ConvexCurve& curve,
                                  std::size_t n = 4096, double tol = 1e-3);

/// max |rho(s0) + rho(s1) - d| over `pairs` antipodal parameter pairs of a
/// smooth constant-width curve; lhs is the max deviation, bound is tol*d
/// (default 1e-2 relative).
VerificationReport verify_curvature_sum(const NormedPlane& plane,
                                        const ConvexCurve& curve,
                                        std::size_t n = 4096,
                                        double tol = 1e-2,
                                        std::size_t pairs = 256);

/// Defect form of the length bound: l(curve) <= diam * l(S)/2 + D with
/// D = integral of (d/du omega(phi, gamma)) / omega(phi, phi').
VerificationReport verify_defect_integral(const NormedPlane& plane,
                                          const ConvexCurve& curve,
                                          std::size_t n = 4096,
                                          double tol = 1e-3);

/// The quadrature value D itself (midpoint central differences over the
/// path grid; telescopes to zero on Radon-normalized planes).
double defect_integral(const NormedPlane& plane, const ConvexCurve& curve,
                       const ArcLengthPath& path);

/// One random certified-convex curve family member for the open-problem
/// sweep; harmonics as (k, a_k, b_k) on the Euclidean support function.
struct SweepCurve {
  std::vector<std::array<double, 3>> harmonics;
  double ratio = 0.0;  // l(curve) / (diam * l(S)/2)
  std::string fingerprint;
};

struct OpenProblemSweep {
  std::string plane;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  double tol = 0.0;
  double circle_ratio = 0.0;  // unit-circle baseline, should be ~1
  std::vector<SweepCurve> curves;
  std::size_t best_index = 0;
  double best_ratio = 0.0;
  // Set when best_ratio > 1 + tol survives a recheck at 4x resolution.
  bool counterexample_candidate = false;
  double recheck_ratio = 0.0;
};

/// Sweeps random convex perturbations of the unit circle in a non-Radon
/// plane and records the largest length/bound ratio.  Data emission only:
/// a ratio above 1 + tol is re-measured at 4x resolution before being
/// flagged for manual review.  Throws std::domain_error on Radon planes.
OpenProblemSweep explore_open_problem(const NormedPlane& plane,
                                      std::size_t curve_count,
                                      std::uint64_t seed, std::size_t n = 4096,
                                      double tol = 1e-4);

}  // namespace minkgeo
