#include "minkgeo/circle_path.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace minkgeo {

namespace {
constexpr double kTau = 2.0 * 3.14159265358979323846;

double interp(const std::vector<double>& xs, const std::vector<double>& ys,
              double x) {
  // xs non-decreasing; piecewise-linear with flat-interval guard.
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  std::size_t i =
      (it == xs.begin()) ? 0 : std::min(std::size_t(it - xs.begin()) - 1,
                                        xs.size() - 2);
  const double dx = xs[i + 1] - xs[i];
  if (dx <= 0.0) return ys[i];
  const double w = (x - xs[i]) / dx;
  return ys[i] + w * (ys[i + 1] - ys[i]);
}
}  // namespace

// Bridges to the cache slot embedded in UnitBall.
struct PathCacheAccess {
  static PathPtr get(const UnitBall& b, std::size_t n) {
    std::lock_guard<std::mutex> lock(b.cache_mu_);
    if (b.cached_path_ && b.cached_path_n_ == n)
      return std::static_pointer_cast<const ArcLengthPath>(b.cached_path_);
    return nullptr;
  }
  static void put(const UnitBall& b, std::size_t n, const PathPtr& p) {
    std::lock_guard<std::mutex> lock(b.cache_mu_);
    b.cached_path_ = p;
    b.cached_path_n_ = n;
  }
};

ArcLengthPath::ArcLengthPath(BallPtr ball, std::size_t n)
    : ball_(std::move(ball)), n_(n) {
  if (!ball_) throw std::invalid_argument("arc length path: null ball");
  if (n_ < 64) throw std::invalid_argument("arc length path: need n >= 64");

  dense_t_ = boundary_params(*ball_, std::max<std::size_t>(8 * n_, 8192));
  const std::size_t m = dense_t_.size();
  std::vector<Vec2> dense_pts(m);
  for (std::size_t k = 0; k < m; ++k)
    dense_pts[k] = ball_->boundary_point(dense_t_[k]);

  dense_len_.resize(m);
  dense_len_[0] = 0.0;
  twice_area_ = 0.0;
  for (std::size_t k = 1; k < m; ++k) {
    dense_len_[k] = dense_len_[k - 1] + ball_->gauge(dense_pts[k] - dense_pts[k - 1]);
    twice_area_ += cross(dense_pts[k - 1], dense_pts[k]);
  }
  length_ = dense_len_.back();
  if (!(length_ > 0.0))
    throw std::invalid_argument("arc length path: degenerate boundary");

  u_.resize(n_ + 1);
  pts_.resize(n_ + 1);
  tan_.resize(n_ + 1);
  for (std::size_t i = 0; i < n_; ++i) {
    u_[i] = length_ * double(i) / double(n_);
    const double t = interp(dense_len_, dense_t_, u_[i]);
    pts_[i] = ball_->boundary_point(t);
    const Vec2 d = ball_->boundary_tangent(t);
    tan_[i] = d / ball_->gauge(d);
  }
  u_[n_] = length_;
  pts_[n_] = pts_[0];
  tan_[n_] = tan_[0];
}

double ArcLengthPath::boundary_param_at(double u) const {
  double w = std::fmod(u, length_);
  if (w < 0.0) w += length_;
  return interp(dense_len_, dense_t_, w);
}

double ArcLengthPath::length_at_boundary_param(double t) const {
  double w = std::fmod(t, kTau);
  if (w < 0.0) w += kTau;
  return interp(dense_t_, dense_len_, w);
}

Vec2 ArcLengthPath::point_at(double u) const {
  return ball_->boundary_point(boundary_param_at(u));
}

Vec2 ArcLengthPath::tangent_at(double u) const {
  const Vec2 d = ball_->boundary_tangent(boundary_param_at(u));
  return d / ball_->gauge(d);
}

PathPtr parametrize_unit_circle(const NormedPlane& plane, std::size_t n) {
  if (auto hit = PathCacheAccess::get(*plane.ball, n)) return hit;
  auto path = std::make_shared<const ArcLengthPath>(plane.ball, n);
  PathCacheAccess::put(*plane.ball, n, path);
  return path;
}

double circle_perimeter(const NormedPlane& plane, std::size_t n) {
  return parametrize_unit_circle(plane, n)->total_length();
}

double circle_perimeter_antinorm(const NormedPlane& plane, std::size_t n) {
  const auto t = boundary_params(*plane.ball, std::max<std::size_t>(8 * n, 8192));
  double sum = 0.0;
  Vec2 prev = plane.ball->boundary_point(t[0]);
  for (std::size_t k = 1; k < t.size(); ++k) {
    const Vec2 cur = plane.ball->boundary_point(t[k]);
    sum += antinorm_eval(plane, cur - prev);
    prev = cur;
  }
  return sum;
}

double kepler_deviation(const NormedPlane& plane, const ArcLengthPath& path) {
  double dev = 0.0;
  for (std::size_t i = 0; i < path.resolution(); ++i) {
    const double w =
        plane.omega_scale * cross(path.points()[i], path.tangents()[i]);
    dev = std::max(dev, std::fabs(w - 1.0));
  }
  return dev;
}

}  // namespace minkgeo
