#include "minkgeo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "minkgeo/curvature.hpp"
#include "minkgeo/curve_ops.hpp"

namespace minkgeo {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

VerificationReport base_report(const char* claim, const NormedPlane& plane,
                               const ConvexCurve& curve, std::size_t n,
                               double tol) {
  VerificationReport r;
  r.claim = claim;
  r.plane = plane.fingerprint();
  r.curve = curve.fingerprint();
  r.n = n;
  r.tol = tol;
  return r;
}

void finish(VerificationReport& r) {
  r.slack = r.bound - r.lhs;
  r.equality = std::fabs(r.slack) < r.tol * std::fabs(r.bound);
}

}  // namespace

VerificationReport verify_rosenthal_szasz(const NormedPlane& plane,
                                          const ConvexCurve& curve,
                                          std::size_t n, double tol) {
  if (!is_radon(plane).first)
    throw std::domain_error(
        "plane is not Radon; the length bound in this form needs one (use "
        "verify_antinorm_bound for general planes)");
  NormedPlane norm = radon_normalize(plane);
  VerificationReport r = base_report("RS_RADON", norm, curve, n, tol);
  r.lhs = curve_length(norm, curve, n);
  r.bound = diameter(norm, curve, n).value * circle_perimeter(norm, n) / 2.0;
  finish(r);
  return r;
}

VerificationReport verify_antinorm_bound(const NormedPlane& plane,
                                         const ConvexCurve& curve,
                                         std::size_t n, double tol) {
  VerificationReport r = base_report("RS_ANTINORM", plane, curve, n, tol);
  r.lhs = curve_length_antinorm(plane, curve, n);
  r.bound =
      diameter(plane, curve, n).value * circle_perimeter_antinorm(plane, n) / 2.0;
  finish(r);
  return r;
}

VerificationReport verify_dual_bound(const NormedPlane& plane,
                                     const ConvexCurve& curve, std::size_t n,
                                     double tol) {
  VerificationReport r = base_report("RS_DUAL", plane, curve, n, tol);
  r.lhs = curve_length(plane, curve, n);
  r.bound = diameter_antinorm(plane, curve, n).value *
            circle_perimeter(plane, n) / 2.0;
  finish(r);
  return r;
}

VerificationReport verify_barbier(const NormedPlane& plane,
                                  const ConvexCurve& curve, std::size_t n,
                                  double tol) {
  if (!is_radon(plane).first)
    throw std::domain_error("the exact length formula needs a Radon plane");
  NormedPlane norm = radon_normalize(plane);
  auto [cw, d] = is_constant_width(norm, curve);
  if (!cw)
    throw std::domain_error(
        "curve is not of constant width; no exact length formula applies");
  VerificationReport r = base_report("BARBIER", norm, curve, n, tol);
  r.lhs = curve_length(norm, curve, n);
  r.bound = d * circle_perimeter(norm, n) / 2.0;
  finish(r);
  return r;
}

VerificationReport verify_curvature_sum(const NormedPlane& plane,
                                        const ConvexCurve& curve,
                                        std::size_t n, double tol,
                                        std::size_t pairs) {
  auto [cw, d] = is_constant_width(plane, curve);
  if (!cw)
    throw std::domain_error(
        "curvature-radius pairing needs a constant-width curve");
  PathPtr path = parametrize_unit_circle(plane, n);
  CurvatureProfile prof = curvature_profile(plane, curve, *path);
  double worst = 0.0;
  for (std::size_t i = 0; i < pairs; ++i) {
    double s0 = prof.curve_length() * static_cast<double>(i) /
                static_cast<double>(pairs);
    double psi = prof.normal_angle_at(s0);
    double s1 = prof.param_of_normal(psi + std::numbers::pi);
    worst = std::max(worst,
                     std::fabs(prof.radius_at(s0) + prof.radius_at(s1) - d));
  }
  VerificationReport r = base_report("CURVATURE_SUM", plane, curve, n, tol);
  r.lhs = worst;          // max |rho(s0) + rho(s1) - d|
  r.bound = tol * d;      // allowed deviation
  r.slack = r.bound - r.lhs;
  r.equality = r.lhs <= r.bound;
  return r;
}

double defect_integral(const NormedPlane& plane, const ConvexCurve& curve,
                       const ArcLengthPath& path) {
  std::size_t n = path.resolution();
  std::vector<double> g(n);
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 phi = path.points()[i];
    Vec2 tan = path.tangents()[i];
    Vec2 gamma = curve.support_point(tan.perp_cw());
    g[i] = symplectic_form(plane, phi, gamma);
    w[i] = symplectic_form(plane, phi, tan);
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    acc += (g[(i + 1) % n] - g[(i + n - 1) % n]) / (2.0 * w[i]);
  return acc;
}

VerificationReport verify_defect_integral(const NormedPlane& plane,
                                          const ConvexCurve& curve,
                                          std::size_t n, double tol) {
  PathPtr path = parametrize_unit_circle(plane, n);
  double defect = defect_integral(plane, curve, *path);
  VerificationReport r = base_report("DEFECT_INTEGRAL", plane, curve, n, tol);
  r.lhs = curve_length(plane, curve, n);
  r.bound =
      diameter(plane, curve, n).value * circle_perimeter(plane, n) / 2.0 +
      defect;
  finish(r);
  return r;
}

OpenProblemSweep explore_open_problem(const NormedPlane& plane,
                                      std::size_t curve_count,
                                      std::uint64_t seed, std::size_t n,
                                      double tol) {
  if (is_radon(plane).first)
    throw std::domain_error(
        "the open problem concerns non-Radon planes only; on Radon planes "
        "the bound is a theorem");

  OpenProblemSweep sweep;
  sweep.plane = plane.fingerprint();
  sweep.seed = seed;
  sweep.n = n;
  sweep.tol = tol;

  auto ratio_of = [&plane](const ConvexCurve& c, std::size_t res) {
    double l = curve_length(plane, c, res);
    double diam = diameter(plane, c, res).value;
    return l / (diam * circle_perimeter(plane, res) / 2.0);
  };

  ConvexCurve circle = ConvexCurve::unit_circle(plane);
  sweep.circle_ratio = ratio_of(circle, n);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> count_dist(1, 4);
  std::uniform_int_distribution<int> order_dist(2, 7);
  std::uniform_real_distribution<double> coef_dist(-1.0, 1.0);

  sweep.curves.reserve(curve_count);
  for (std::size_t c = 0; c < curve_count; ++c) {
    int terms = count_dist(rng);
    std::vector<std::array<double, 3>> harm;
    double mass = 0.0;
    for (int t = 0; t < terms; ++t) {
      double k = order_dist(rng);
      double a = coef_dist(rng), b = coef_dist(rng);
      harm.push_back({k, a, b});
      mass += (k * k - 1.0) * std::hypot(a, b);
    }
    // Scale so h + h'' >= 1 - 0.45 stays certified convex.
    double scale = mass > 0.0 ? 0.45 / mass : 0.0;
    for (auto& t : harm) {
      t[1] *= scale;
      t[2] *= scale;
    }
    auto h = [&harm](double th) {
      double v = 1.0;
      for (const auto& t : harm)
        v += t[1] * std::cos(t[0] * th) + t[2] * std::sin(t[0] * th);
      return v;
    };
    ConvexCurve curve = ConvexCurve::from_support_function(h, 1024);
    SweepCurve entry;
    entry.harmonics = std::move(harm);
    entry.ratio = ratio_of(curve, n);
    entry.fingerprint = curve.fingerprint();
    if (entry.ratio > sweep.best_ratio) {
      sweep.best_ratio = entry.ratio;
      sweep.best_index = c;
    }
    sweep.curves.push_back(std::move(entry));
  }

  if (sweep.best_ratio > 1.0 + tol) {
    // Re-measure at 4x resolution before waving the flag; quadrature noise
    // must not manufacture mathematics.
    const SweepCurve& best = sweep.curves[sweep.best_index];
    auto h = [&best](double th) {
      double v = 1.0;
      for (const auto& t : best.harmonics)
        v += t[1] * std::cos(t[0] * th) + t[2] * std::sin(t[0] * th);
      return v;
    };
    ConvexCurve curve = ConvexCurve::from_support_function(h, 4096);
    sweep.recheck_ratio = ratio_of(curve, 4 * n);
    sweep.counterexample_candidate = sweep.recheck_ratio > 1.0 + tol;
  }
  return sweep;
}

}  // namespace minkgeo
