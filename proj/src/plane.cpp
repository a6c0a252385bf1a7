#include "minkgeo/plane.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "minkgeo/minimize.hpp"

namespace minkgeo {

namespace {
constexpr double kTau = 2.0 * 3.14159265358979323846;
}

std::string NormedPlane::fingerprint() const {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "|c=%.9g", omega_scale);
  return ball->fingerprint() + buf;
}

NormedPlane make_plane(BallPtr ball, double omega_scale) {
  if (!ball) throw std::invalid_argument("plane: null unit ball");
  if (!(omega_scale > 0.0))
    throw std::invalid_argument("plane: omega scale must be positive");
  return {std::move(ball), omega_scale};
}

NormedPlane make_lp_plane(double p, double omega_scale) {
  return make_plane(make_lp_ball(p), omega_scale);
}

double norm_eval(const NormedPlane& plane, Vec2 v) {
  return plane.ball->gauge(v);
}

double symplectic_form(const NormedPlane& plane, Vec2 x, Vec2 y) {
  return plane.omega_scale * cross(x, y);
}

double antinorm_eval(const NormedPlane& plane, Vec2 v) {
  // omega(x, v) = c * <x, v rotated cw>, so the sup over the ball is the
  // Euclidean support function at the rotated direction.
  return plane.omega_scale * plane.ball->support(v.perp_cw());
}

bool birkhoff_orthogonal(const NormedPlane& plane, Vec2 v, Vec2 w,
                         double tol) {
  const double nv = norm_eval(plane, v), nw = norm_eval(plane, w);
  if (!(nv > 0.0) || !(nw > 0.0))
    throw std::domain_error("birkhoff: zero vector");
  // Any minimizer satisfies |t| * ||w|| <= 2 ||v||; bracket with slack.
  const double r = 4.0 * nv / nw;
  auto f = [&](double t) { return norm_eval(plane, v + t * w); };
  const double fmin = golden_min(f, -r, r, 1e-12 * r).second;
  return fmin >= nv * (1.0 - tol);
}

std::pair<bool, std::optional<RadonWitness>> is_radon(const NormedPlane& plane,
                                                      int n_dirs, double tol) {
  if (n_dirs < 8) throw std::invalid_argument("is_radon: need n_dirs >= 8");

  // Anti-norm ratio sweep; a Radon norm has a direction-independent ratio.
  double rmin = 0.0, rmax = 0.0;
  for (int i = 0; i < n_dirs; ++i) {
    const Vec2 u = dir_of(kTau * double(i) / n_dirs);
    const double r = antinorm_eval(plane, u) / norm_eval(plane, u);
    rmin = i ? std::min(rmin, r) : r;
    rmax = i ? std::max(rmax, r) : r;
  }
  const bool ratio_constant = (rmax - rmin) <= tol * 0.5 * (rmax + rmin);

  bool symmetric = true;
  std::optional<RadonWitness> witness;
  for (int i = 0; i < n_dirs; ++i) {
    const double t = kTau * double(i) / n_dirs;
    const Vec2 v = plane.ball->boundary_point(t);
    const Vec2 w0 = plane.ball->boundary_tangent(t);
    const Vec2 w = w0 / norm_eval(plane, w0);
    // v -| w holds by construction (w spans the support line at v); Radon
    // means the reverse holds too.
    if (!birkhoff_orthogonal(plane, w, v, tol)) {
      symmetric = false;
      witness = RadonWitness{v, w};
      break;
    }
  }

  if (symmetric != ratio_constant)
    throw std::runtime_error(
        "is_radon: orthogonality and anti-norm ratio tests disagree near the "
        "given tolerance");
  return {symmetric, witness};
}

NormedPlane radon_normalize(const NormedPlane& plane, double tol) {
  auto [radon, witness] = is_radon(plane);
  if (!radon) {
    double rmin = 0.0, rmax = 0.0;
    for (int i = 0; i < 64; ++i) {
      const Vec2 u = dir_of(kTau * double(i) / 64.0);
      const double r = antinorm_eval(plane, u) / norm_eval(plane, u);
      rmin = i ? std::min(rmin, r) : r;
      rmax = i ? std::max(rmax, r) : r;
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "radon_normalize: plane is not Radon (anti-norm/norm ratio "
                  "spans [%.6g, %.6g])",
                  rmin, rmax);
    throw std::domain_error(buf);
  }
  const Vec2 u0{1.0, 0.0};
  const double r = antinorm_eval(plane, u0) / norm_eval(plane, u0);
  NormedPlane out{plane.ball, plane.omega_scale / r};
  for (int i = 0; i < 16; ++i) {
    const Vec2 u = dir_of(kTau * double(i) / 16.0);
    const double q = antinorm_eval(out, u) / norm_eval(out, u);
    if (std::fabs(q - 1.0) > tol)
      throw std::domain_error(
          "radon_normalize: ratio check failed after rescaling");
  }
  return out;
}

NormedPlane antinorm_unit_ball(const NormedPlane& plane) {
  // { v : antinorm(v) <= 1 } is the polar body, turned a quarter counter-
  // clockwise and scaled by 1/c.  Keep representations exact where possible.
  const double c = plane.omega_scale;
  BallPtr ball;
  if (auto lp = std::dynamic_pointer_cast<const LpBall>(plane.ball)) {
    // The dual lp ball is rotation-invariant under quarter turns.
    ball = make_lp_ball(lp->dual_exponent(), 1.0 / (c * lp->scale()));
  } else if (auto pg = std::dynamic_pointer_cast<const PolygonBall>(plane.ball)) {
    const ConvexPolygon polar = pg->geometry().polar();
    std::vector<Vec2> verts;
    verts.reserve(polar.size());
    for (const Vec2& q : polar.vertices()) verts.push_back(q.perp() / c);
    ball = std::make_shared<PolygonBall>(std::move(verts));
  } else {
    const auto& b = *plane.ball;
    ball = make_smooth_ball(
        [&](double t) { return b.gauge(dir_of(t).perp_cw()) / c; }, 4096);
  }
  return {std::move(ball), c};
}

}  // namespace minkgeo
