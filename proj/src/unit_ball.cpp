#include "minkgeo/unit_ball.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "minkgeo/minimize.hpp"

namespace minkgeo {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTau = 2.0 * kPi;
}  // namespace

std::uint64_t fnv1a64(const void* data, std::size_t bytes, std::uint64_t seed) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed ? seed : 14695981039346656037ULL;
  for (std::size_t i = 0; i < bytes; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

static std::uint64_t hash_doubles(const double* d, std::size_t n,
                                  std::uint64_t seed = 0) {
  return fnv1a64(d, n * sizeof(double), seed);
}

std::string UnitBall::fingerprint() const {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "#%08llx",
                static_cast<unsigned long long>(data_hash() & 0xffffffffULL));
  return describe() + buf;
}

// ---- LpBall --------------------------------------------------------------

LpBall::LpBall(double p, double scale) : p_(p), scale_(scale) {
  if (!(p > 1.0) || !(p <= 1e6))
    throw std::invalid_argument("lp ball: exponent must lie in (1, 1e6]");
  if (!(scale > 0.0)) throw std::invalid_argument("lp ball: scale must be > 0");
  q_ = p_ / (p_ - 1.0);
}

static double lp_norm(Vec2 v, double p) {
  const double ax = std::fabs(v.x), ay = std::fabs(v.y);
  const double m = std::max(ax, ay);
  if (m == 0.0) return 0.0;
  return m * std::pow(std::pow(ax / m, p) + std::pow(ay / m, p), 1.0 / p);
}

double LpBall::gauge(Vec2 v) const { return lp_norm(v, p_) / scale_; }

double LpBall::support(Vec2 u) const { return scale_ * lp_norm(u, q_); }

Vec2 LpBall::boundary_point(double t) const {
  const Vec2 d = dir_of(t);
  return d / gauge(d);
}

Vec2 LpBall::outward_normal(Vec2 on_boundary) const {
  const double x = on_boundary.x / scale_, y = on_boundary.y / scale_;
  auto comp = [this](double c) {
    return c == 0.0 ? 0.0 : std::copysign(std::pow(std::fabs(c), p_ - 1.0), c);
  };
  return {comp(x), comp(y)};
}

Vec2 LpBall::boundary_tangent(double t) const {
  return outward_normal(boundary_point(t)).perp();
}

double LpBall::normal_angle(double t) const {
  return outward_normal(boundary_point(t)).angle();
}

std::shared_ptr<const UnitBall> LpBall::polar() const {
  return std::make_shared<LpBall>(q_, 1.0 / scale_);
}

std::string LpBall::describe() const {
  char buf[64];
  if (scale_ == 1.0)
    std::snprintf(buf, sizeof(buf), "lp(p=%.6g)", p_);
  else
    std::snprintf(buf, sizeof(buf), "lp(p=%.6g,s=%.6g)", p_, scale_);
  return buf;
}

std::uint64_t LpBall::data_hash() const {
  const double d[2] = {p_, scale_};
  return hash_doubles(d, 2);
}

// ---- PolygonBall ---------------------------------------------------------

PolygonBall::PolygonBall(std::vector<Vec2> full_vertex_loop)
    : poly_(std::move(full_vertex_loop)) {
  if (!poly_.is_origin_symmetric(1e-9))
    throw std::invalid_argument("polygon ball: not origin-symmetric");
}

double PolygonBall::gauge(Vec2 v) const { return poly_.gauge(v); }

double PolygonBall::support(Vec2 u) const { return poly_.support(u); }

Vec2 PolygonBall::boundary_point(double t) const {
  return poly_.ray_point(dir_of(t));
}

Vec2 PolygonBall::boundary_tangent(double t) const {
  return poly_.edge_dir(poly_.edge_for_ray(dir_of(t)));
}

double PolygonBall::normal_angle(double t) const {
  return poly_.edge_normal(poly_.edge_for_ray(dir_of(t))).angle();
}

std::vector<double> PolygonBall::boundary_breaks() const {
  std::vector<double> b;
  b.reserve(poly_.size());
  for (const Vec2& v : poly_.vertices()) {
    double a = std::fmod(v.angle(), kTau);
    if (a < 0.0) a += kTau;
    b.push_back(a);
  }
  std::sort(b.begin(), b.end());
  return b;
}

std::shared_ptr<const UnitBall> PolygonBall::polar() const {
  return std::make_shared<PolygonBall>(poly_.polar().vertices());
}

std::string PolygonBall::describe() const {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "polygon[%zu]", poly_.size());
  return buf;
}

std::uint64_t PolygonBall::data_hash() const {
  return hash_doubles(reinterpret_cast<const double*>(poly_.vertices().data()),
                      2 * poly_.size());
}

// ---- RadonGlueBall -------------------------------------------------------

RadonGlueBall::RadonGlueBall(std::vector<Vec2> glued, std::vector<Vec2> arc)
    : PolygonBall(std::move(glued)), arc_(std::move(arc)) {}

std::string RadonGlueBall::describe() const {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "radon_glue[%zu]", arc_.size());
  return buf;
}

// ---- SmoothBall ----------------------------------------------------------

SmoothBall::SmoothBall(std::vector<double> samples)
    : h_([&samples] {
        const std::size_t n = samples.size();
        if (n < 16 || n % 2 != 0)
          throw std::invalid_argument(
              "smooth ball: need an even number (>= 16) of uniform samples");
        std::vector<double> knots(n);
        for (std::size_t i = 0; i < n; ++i) knots[i] = kTau * double(i) / n;
        return PeriodicSpline(std::move(knots), std::move(samples), kTau);
      }()) {
  const std::size_t n = h_.size();
  double mean = 0.0;
  for (double v : h_.values()) mean += v;
  mean /= double(n);
  double min_h = h_.values()[0], asym = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    min_h = std::min(min_h, h_.values()[i]);
    asym = std::max(asym, std::fabs(h_.values()[i] - h_.values()[(i + n / 2) % n]));
  }
  if (!(min_h > 1e-9 * mean))
    throw std::invalid_argument(
        "smooth ball: support values not bounded away from zero");
  if (asym > 1e-6 * mean)
    throw std::invalid_argument("smooth ball: not origin-symmetric");
  // Strict convexity: the radius of curvature h + h'' must stay positive.
  for (std::size_t i = 0; i < 2 * n; ++i) {
    const double t = kTau * (double(i) + 0.5) / double(2 * n);
    const double g = h_.eval(t) + h_.deriv2(t);
    if (!(g > 1e-9 * mean))
      throw std::invalid_argument("smooth ball: support function not convex");
  }
}

double SmoothBall::support(Vec2 u) const {
  const double l = u.len();
  if (l == 0.0) return 0.0;
  return l * h_.eval(u.angle());
}

Vec2 SmoothBall::boundary_point(double t) const {
  const Vec2 u = dir_of(t);
  return h_.eval(t) * u + h_.deriv(t) * u.perp();
}

Vec2 SmoothBall::boundary_tangent(double t) const { return dir_of(t).perp(); }

double SmoothBall::ray_param(Vec2 v) const {
  // The support point at normal angle t lags the ray angle by less than a
  // quarter turn (tan of the lag is h'/h), so the bracket below straddles
  // the unique parameter with boundary_point(t) parallel to v.
  const double a = v.angle();
  const Vec2 vn = v.normalized();
  auto f = [&](double t) { return cross(boundary_point(t), vn); };
  double lo = a - kPi / 2.0, hi = a + kPi / 2.0;
  for (int it = 0; it < 64; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double SmoothBall::gauge(Vec2 v) const {
  if (v.x == 0.0 && v.y == 0.0) return 0.0;
  const double t = ray_param(v);
  return v.len() / boundary_point(t).len();
}

std::shared_ptr<const UnitBall> SmoothBall::polar() const {
  // The polar body's support function is the gauge of this one.
  const std::size_t n = h_.size();
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i)
    g[i] = gauge(dir_of(kTau * double(i) / n));
  return std::make_shared<SmoothBall>(std::move(g));
}

std::string SmoothBall::describe() const {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "smooth[%zu]", h_.size());
  return buf;
}

std::uint64_t SmoothBall::data_hash() const {
  return hash_doubles(h_.values().data(), h_.size());
}

// ---- factories -----------------------------------------------------------

BallPtr make_lp_ball(double p, double scale) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp ball: need p >= 1");
  if (!(scale > 0.0)) throw std::invalid_argument("lp ball: scale must be > 0");
  if (p == 1.0) {
    return std::make_shared<PolygonBall>(std::vector<Vec2>{
        {scale, 0.0}, {0.0, scale}, {-scale, 0.0}, {0.0, -scale}});
  }
  return std::make_shared<LpBall>(p, scale);
}

BallPtr make_polygon_ball(std::vector<Vec2> vertices) {
  if (vertices.size() >= 3) {
    try {
      ConvexPolygon trial(vertices);
      if (trial.is_origin_symmetric(1e-9))
        return std::make_shared<PolygonBall>(trial.vertices());
    } catch (const std::invalid_argument&) {
      // fall through: treat the list as one half
    }
  }
  // Mirror: the list plus its antipodes must be in convex position, but the
  // concatenation is not a boundary walk, so put it back in angular order.
  std::vector<Vec2> full = vertices;
  for (const Vec2& v : vertices) full.push_back(-v);
  std::sort(full.begin(), full.end(), [](const Vec2& a, const Vec2& b) {
    return std::atan2(a.y, a.x) < std::atan2(b.y, b.x);
  });
  return std::make_shared<PolygonBall>(std::move(full));
}

BallPtr make_smooth_ball(const std::function<double(double)>& h,
                         std::size_t grid) {
  if (grid < 16) grid = 16;
  if (grid % 2) ++grid;
  std::vector<double> s(grid);
  for (std::size_t i = 0; i < grid; ++i) s[i] = h(kTau * double(i) / grid);
  return std::make_shared<SmoothBall>(std::move(s));
}

BallPtr make_support_ball(const std::vector<double>& angles,
                          const std::vector<double>& values) {
  if (angles.size() != values.size() || angles.size() < 8)
    throw std::invalid_argument(
        "support samples: need >= 8 matching angles/values");
  for (std::size_t i = 0; i < angles.size(); ++i) {
    if (angles[i] < 0.0 || angles[i] >= kTau)
      throw std::invalid_argument("support samples: angles must be in [0, 2pi)");
    if (i && !(angles[i] > angles[i - 1]))
      throw std::invalid_argument(
          "support samples: angles must be strictly increasing");
  }
  PeriodicSpline user(angles, values, kTau);
  std::size_t grid = std::max<std::size_t>(4 * angles.size(), 4096);
  if (grid % 2) ++grid;
  std::vector<double> s(grid);
  for (std::size_t i = 0; i < grid; ++i) {
    const double t = kTau * double(i) / grid;
    // Symmetrize exactly; SmoothBall rejects inputs where this changes
    // values beyond tolerance.
    s[i] = 0.5 * (user.eval(t) + user.eval(t + kPi));
  }
  double asym = 0.0, mean = 0.0;
  for (std::size_t i = 0; i < grid; ++i) {
    const double t = kTau * double(i) / grid;
    asym = std::max(asym, std::fabs(user.eval(t) - s[i]));
    mean += s[i];
  }
  mean /= double(grid);
  if (asym > 1e-6 * mean)
    throw std::invalid_argument("support samples: not origin-symmetric");
  return std::make_shared<SmoothBall>(std::move(s));
}

BallPtr make_radon_glue_ball(std::vector<Vec2> arc) {
  if (arc.size() < 2)
    throw std::invalid_argument("radon glue: arc needs at least 2 points");
  if (dist(arc.front(), Vec2(1.0, 0.0)) > 1e-9 ||
      dist(arc.back(), Vec2(0.0, 1.0)) > 1e-9)
    throw std::invalid_argument(
        "radon glue: arc must run from (1,0) to (0,1)");
  arc.front() = {1.0, 0.0};
  arc.back() = {0.0, 1.0};
  for (Vec2& p : arc) {
    if (p.x < -1e-12 || p.y < -1e-12)
      throw std::invalid_argument(
          "radon glue: arc must stay in the closed first quadrant");
    p.x = std::max(p.x, 0.0);
    p.y = std::max(p.y, 0.0);
  }
  for (std::size_t i = 0; i + 2 < arc.size(); ++i) {
    const Vec2 e0 = arc[i + 1] - arc[i], e1 = arc[i + 2] - arc[i + 1];
    if (cross(e0, e1) < -1e-12 * e0.len() * e1.len())
      throw std::invalid_argument("radon glue: arc is not convex");
  }

  // Polar arc, vertex per edge: the support line of edge i maps to n_i/d_i.
  std::vector<Vec2> dual;
  dual.reserve(arc.size() - 1);
  for (std::size_t i = 0; i + 1 < arc.size(); ++i) {
    const Vec2 e = arc[i + 1] - arc[i];
    if (e.len() == 0.0) continue;
    const Vec2 n = e.perp_cw().normalized();
    const double d = arc[i].dot(n);
    if (!(d > 1e-12))
      throw std::invalid_argument(
          "radon glue: arc support line passes through the origin");
    dual.push_back(n / d);
  }

  std::vector<Vec2> glued;
  glued.reserve(2 * (arc.size() + dual.size()));
  for (const Vec2& p : arc) glued.push_back(p);
  for (const Vec2& q : dual) glued.push_back(q.perp());
  for (const Vec2& p : arc) glued.push_back(-p);
  for (const Vec2& q : dual) glued.push_back(-q.perp());
  return std::make_shared<RadonGlueBall>(std::move(glued), std::move(arc));
}

std::vector<double> boundary_params(const UnitBall& ball, std::size_t n_base) {
  if (n_base < 8) n_base = 8;
  std::vector<double> t;
  t.reserve(n_base + 1 + 64);
  for (std::size_t k = 0; k <= n_base; ++k)
    t.push_back(kTau * double(k) / double(n_base));
  for (double b : ball.boundary_breaks())
    if (b > 0.0 && b < kTau) t.push_back(b);
  std::sort(t.begin(), t.end());
  std::vector<double> out;
  out.reserve(t.size());
  for (double v : t)
    if (out.empty() || v - out.back() > 1e-13) out.push_back(v);
  if (out.back() != kTau) out.back() = kTau;  // guard against dedupe at the seam
  return out;
}

}  // namespace minkgeo
