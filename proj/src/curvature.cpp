#include "minkgeo/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "minkgeo/periodic_spline.hpp"
#include "minkgeo/unit_ball.hpp"

namespace minkgeo {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

// Linear interpolation in a sorted table (cyclic queries already reduced).
double table_interp(const std::vector<double>& xs, const std::vector<double>& ys,
                    double x) {
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  std::size_t i = (it == xs.begin()) ? 0 : static_cast<std::size_t>(it - xs.begin()) - 1;
  if (i + 1 >= xs.size()) i = xs.size() - 2;
  double span = xs[i + 1] - xs[i];
  double w = span > 0.0 ? (x - xs[i]) / span : 0.0;
  return ys[i] + (ys[i + 1] - ys[i]) * w;
}

double reduce_into(double x, double lo, double period) {
  double r = std::fmod(x - lo, period);
  if (r < 0.0) r += period;
  return lo + r;
}

}  // namespace

double CurvatureProfile::curvature_at(double s) const {
  std::size_t n = k_.size();
  double l = l_;
  double pos = std::fmod(s, l);
  if (pos < 0.0) pos += l;
  double x = pos * static_cast<double>(n) / l;
  std::size_t i = std::min(static_cast<std::size_t>(x), n - 1);
  double w = x - static_cast<double>(i);
  return k_[i] + (k_[(i + 1) % n] - k_[i]) * w;
}

double CurvatureProfile::radius_at(double s) const {
  double k = curvature_at(s);
  if (std::fabs(k) < kFlatThreshold)
    return std::numeric_limits<double>::infinity();
  return 1.0 / k;
}

double CurvatureProfile::normal_angle_at(double s) const {
  double pos = std::fmod(s, l_);
  if (pos < 0.0) pos += l_;
  double loops = std::floor((s - pos) / l_ + 0.5);
  return table_interp(s_psi_, psi_, pos) + loops * kTau;
}

double CurvatureProfile::param_of_normal(double psi) const {
  double p = reduce_into(psi, psi_.front(), kTau);
  return table_interp(psi_, s_psi_, p);
}

CurvatureProfile curvature_profile(const NormedPlane& plane,
                                   const ConvexCurve& curve,
                                   const ArcLengthPath& path) {
  if (plane.ball->polygonal())
    throw std::domain_error(
        "curvature needs a smooth norm; round the ball with smooth_approximate "
        "first");
  if (!curve.smooth())
    throw std::domain_error(
        "curvature needs a smooth curve; round it with smooth_approximate "
        "first");

  const PeriodicSpline& h = curve.support_spline();
  std::size_t n = path.resolution();
  std::size_t m = std::max<std::size_t>(4 * n, 8192);

  CurvatureProfile prof;
  prof.L_ = path.total_length();

  // Dense walk of the curve at uniform outward-normal angles.  The envelope
  // point for normal angle psi is h u + h' u'.
  prof.psi_.resize(m + 1);
  prof.s_psi_.resize(m + 1);
  std::vector<Vec2> pts(m + 1);
  for (std::size_t j = 0; j <= m; ++j) {
    double psi = kTau * static_cast<double>(j) / static_cast<double>(m);
    Vec2 e = dir_of(psi);
    pts[j] = h.eval(psi) * e + h.deriv(psi) * e.perp();
    prof.psi_[j] = psi;
  }
  prof.s_psi_[0] = 0.0;
  for (std::size_t j = 0; j < m; ++j)
    prof.s_psi_[j + 1] =
        prof.s_psi_[j] + norm_eval(plane, pts[j + 1] - pts[j]);
  prof.l_ = prof.s_psi_[m];

  // Circle-side inversion table: boundary parameter and arc length of S as a
  // function of its outward normal angle.
  std::vector<double> tb = boundary_params(*plane.ball, m);
  std::size_t q = tb.size();
  std::vector<double> na(q);
  na[0] = plane.ball->normal_angle(tb[0]);
  for (std::size_t k = 1; k < q; ++k) {
    double raw = plane.ball->normal_angle(tb[k]);
    double prev = na[k - 1];
    double d = std::fmod(raw - prev, kTau);
    if (d < 0.0) d += kTau;
    na[k] = prev + d;
  }
  auto circle_len_at_normal = [&](double psi) {
    double p = reduce_into(psi, na.front(), kTau);
    double t = table_interp(na, tb, std::min(p, na.back()));
    return path.length_at_boundary_param(t);
  };

  // t(psi_j), lifted so the sequence increases by L over one loop.
  std::vector<double> tlift(m);
  double offset = 0.0, prev = circle_len_at_normal(prof.psi_[0]);
  tlift[0] = prev;
  for (std::size_t j = 1; j < m; ++j) {
    double raw = circle_len_at_normal(prof.psi_[j]);
    if (raw < prev - 0.5 * prof.L_) offset += prof.L_;
    tlift[j] = raw + offset;
    prev = raw;
  }

  // Periodic residual of t against its average slope, splined over arc
  // length so t(s) can be evaluated (and lifted) anywhere.
  double slope = prof.L_ / prof.l_;
  std::vector<double> knots(m), resid(m);
  for (std::size_t j = 0; j < m; ++j) {
    knots[j] = prof.s_psi_[j];
    resid[j] = tlift[j] - slope * prof.s_psi_[j];
  }
  PeriodicSpline r(std::move(knots), std::move(resid), prof.l_);
  auto t_of_s = [&](double s) { return slope * s + r.eval(s); };

  // Central differences with one Richardson step on the uniform grid.
  prof.s_.resize(n);
  prof.t_.resize(n);
  prof.k_.resize(n);
  prof.rho_.resize(n);
  double step = prof.l_ / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = step * static_cast<double>(i);
    prof.s_[i] = s;
    prof.t_[i] = t_of_s(s);
    double d1 = (t_of_s(s + step) - t_of_s(s - step)) / (2.0 * step);
    double d2 = (t_of_s(s + 2.0 * step) - t_of_s(s - 2.0 * step)) / (4.0 * step);
    double k = (4.0 * d1 - d2) / 3.0;
    prof.k_[i] = k;
    prof.rho_[i] = std::fabs(k) < CurvatureProfile::kFlatThreshold
                       ? std::numeric_limits<double>::infinity()
                       : 1.0 / k;
  }
  return prof;
}

std::pair<double, double> circular_curvature(const NormedPlane& plane,
                                             const ConvexCurve& curve,
                                             const ArcLengthPath& path,
                                             double s) {
  CurvatureProfile prof = curvature_profile(plane, curve, path);
  return {prof.curvature_at(s), prof.radius_at(s)};
}

}  // namespace minkgeo
