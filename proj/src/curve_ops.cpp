#include "minkgeo/curve_ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "minkgeo/unit_ball.hpp"

namespace minkgeo {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

template <class Metric>
double polyline_length(const std::vector<Vec2>& pts, Metric&& metric) {
  double acc = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    acc += metric(pts[(i + 1) % pts.size()] - pts[i]);
  return acc;
}

template <class Metric>
double length_impl(const ConvexCurve& curve, std::size_t n, Metric&& metric) {
  if (curve.kind() == ConvexCurve::Kind::polyline)
    return polyline_length(curve.polygon().vertices(), metric);
  std::size_t m = std::max<std::size_t>(4 * n, 16384);
  return polyline_length(curve.sample_boundary(m), metric);
}

template <class Metric>
DiameterResult diameter_impl(const ConvexCurve& curve, std::size_t n,
                             Metric&& metric) {
  // The sampled boundary polygon; distance maxima of a convex function over
  // a polygon sit on vertex pairs admitting parallel support lines.
  const ConvexPolygon* poly = nullptr;
  std::optional<ConvexPolygon> dense;
  if (curve.kind() == ConvexCurve::Kind::polyline) {
    poly = &curve.polygon();
  } else {
    dense.emplace(curve.sample_boundary(std::max<std::size_t>(n, 512)));
    poly = &*dense;
  }
  const auto& v = poly->vertices();
  DiameterResult best;
  for (auto [i, j] : poly->antipodal_pairs()) {
    double d = metric(v[i] - v[j]);
    if (d > best.value) best = {d, v[i], v[j]};
  }
  return best;
}

}  // namespace

double curve_length(const NormedPlane& plane, const ConvexCurve& curve,
                    std::size_t n) {
  return length_impl(curve, n,
                     [&plane](Vec2 e) { return norm_eval(plane, e); });
}

double curve_length_antinorm(const NormedPlane& plane, const ConvexCurve& curve,
                             std::size_t n) {
  return length_impl(curve, n,
                     [&plane](Vec2 e) { return antinorm_eval(plane, e); });
}

DiameterResult diameter(const NormedPlane& plane, const ConvexCurve& curve,
                        std::size_t n) {
  return diameter_impl(curve, n,
                       [&plane](Vec2 e) { return norm_eval(plane, e); });
}

DiameterResult diameter_antinorm(const NormedPlane& plane,
                                 const ConvexCurve& curve, std::size_t n) {
  return diameter_impl(curve, n,
                       [&plane](Vec2 e) { return antinorm_eval(plane, e); });
}

double minkowski_support(const NormedPlane& plane, const ConvexCurve& curve,
                         const ArcLengthPath& path, double u) {
  Vec2 phi = path.point_at(u);
  Vec2 tan = path.tangent_at(u);
  Vec2 gamma = curve.support_point(tan.perp_cw());
  return symplectic_form(plane, gamma, tan) / symplectic_form(plane, phi, tan);
}

double support_decomposition_residual(const NormedPlane& plane,
                                      const ConvexCurve& curve,
                                      const ArcLengthPath& path) {
  double scale = 0.0, worst = 0.0;
  std::size_t n = path.resolution();
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 phi = path.points()[i];
    Vec2 tan = path.tangents()[i];
    Vec2 gamma = curve.support_point(tan.perp_cw());
    double w = symplectic_form(plane, phi, tan);
    Vec2 recon = (phi * symplectic_form(plane, gamma, tan) -
                  tan * symplectic_form(plane, gamma, phi)) /
                 w;
    scale = std::max(scale, gamma.len());
    worst = std::max(worst, (recon - gamma).len());
  }
  return worst / std::max(scale, 1e-300);
}

double width_in_direction(const NormedPlane& plane, const ConvexCurve& curve,
                          Vec2 v) {
  if (v.x == 0.0 && v.y == 0.0)
    throw std::domain_error("width direction must be non-zero");
  return (curve.support(v) + curve.support(-v)) / plane.ball->support(v);
}

double width_at_param(const NormedPlane& plane, const ConvexCurve& curve,
                      const ArcLengthPath& path, double u) {
  return minkowski_support(plane, curve, path, u) +
         minkowski_support(plane, curve, path, u + 0.5 * path.total_length());
}

std::pair<bool, double> is_constant_width(const NormedPlane& plane,
                                          const ConvexCurve& curve,
                                          std::size_t n_dirs, double tol) {
  if (n_dirs < 4) throw std::invalid_argument("need at least 4 directions");
  std::vector<double> dirs;
  dirs.reserve(n_dirs + 64);
  for (std::size_t k = 0; k < n_dirs; ++k)
    dirs.push_back(kTau * static_cast<double>(k) / static_cast<double>(n_dirs));
  // Width kinks sit at polygon edge normals; include them when present so
  // flat pieces cannot hide between sweep directions.
  if (curve.kind() == ConvexCurve::Kind::polyline)
    for (double a : curve.polygon().normal_angles())
      dirs.push_back(std::fmod(a + kTau, kTau));
  if (plane.ball->polygonal())
    if (auto* pb = dynamic_cast<const PolygonBall*>(plane.ball.get()))
      for (double a : pb->geometry().normal_angles())
        dirs.push_back(std::fmod(a + kTau, kTau));

  double wmin = std::numeric_limits<double>::infinity();
  double wmax = 0.0, acc = 0.0;
  for (double th : dirs) {
    double w = width_in_direction(plane, curve, dir_of(th));
    wmin = std::min(wmin, w);
    wmax = std::max(wmax, w);
    acc += w;
  }
  double mean = acc / static_cast<double>(dirs.size());
  return {wmax - wmin < tol * mean, mean};
}

}  // namespace minkgeo
