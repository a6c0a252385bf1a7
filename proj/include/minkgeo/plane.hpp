#pragma once

#include <optional>
#include <string>
#include <utility>

#include "minkgeo/unit_ball.hpp"
#include "minkgeo/vec2.hpp"

namespace minkgeo {

/// A normed plane: a unit ball plus the scale c > 0 of the symplectic form
/// omega(x, y) = c * (x1 y2 - x2 y1).  Immutable and cheap to copy.
struct NormedPlane {
  BallPtr ball;
  double omega_scale = 1.0;

  std::string fingerprint() const;
};

NormedPlane make_plane(BallPtr ball, double omega_scale = 1.0);
NormedPlane make_lp_plane(double p, double omega_scale = 1.0);

/// Norm of v: the Minkowski functional of the unit ball.
double norm_eval(const NormedPlane& plane, Vec2 v);

/// omega(x, y) = c * cross(x, y).
double symplectic_form(const NormedPlane& plane, Vec2 x, Vec2 y);

/// Anti-norm: sup { omega(x, v) : x in the unit ball }
///          = c * support(v rotated clockwise by a quarter turn).
double antinorm_eval(const NormedPlane& plane, Vec2 v);

/// Birkhoff orthogonality v -| w: ||v|| <= ||v + t w|| for every t.  The
/// minimum over t is found by golden-section search on the bracket
/// |t| <= 4 ||v|| / ||w||; returns true when it is >= ||v|| (1 - tol).
bool birkhoff_orthogonal(const NormedPlane& plane, Vec2 v, Vec2 w,
                         double tol = 1e-6);

/// Witness pair for a failed Radon test: v -| w holds but w -| v fails.
struct RadonWitness {
  Vec2 v, w;
};

/// Tests whether Birkhoff orthogonality is symmetric, by sampling n_dirs
/// boundary points v with their support-line directions w (so v -| w holds
/// by construction) and checking w -| v.  The equivalent anti-norm ratio
/// test (anti-norm / norm constant over directions) is run as well and the
/// two verdicts are required to agree.  On failure the first failing pair
/// in sampling order is returned.
std::pair<bool, std::optional<RadonWitness>> is_radon(const NormedPlane& plane,
                                                      int n_dirs = 256,
                                                      double tol = 1e-4);

/// For a Radon plane, rescales omega so that anti-norm == norm: measures
/// r = antinorm/norm at one direction and divides c by it.  The result is
/// checked at several directions; a non-Radon plane is rejected with the
/// observed ratio spread in the message.
NormedPlane radon_normalize(const NormedPlane& plane, double tol = 1e-6);

/// The plane whose norm is this plane's anti-norm (same omega).  Applying it
/// twice recovers the original norm.
NormedPlane antinorm_unit_ball(const NormedPlane& plane);

}  // namespace minkgeo
