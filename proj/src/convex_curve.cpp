#include "minkgeo/convex_curve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "minkgeo/unit_ball.hpp"

namespace minkgeo {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), pattern, a, b);
  return buf;
}

Vec2 loop_centroid(const std::vector<Vec2>& v) {
  double a2 = 0.0;
  Vec2 c{0.0, 0.0};
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2& p = v[i];
    const Vec2& q = v[(i + 1) % v.size()];
    double w = cross(p, q);
    a2 += w;
    c = c + (p + q) * w;
  }
  return c / (3.0 * a2);
}

}  // namespace

ConvexCurve ConvexCurve::from_polyline(std::vector<Vec2> points) {
  std::vector<Vec2> loop = canonicalize_convex_loop(std::move(points));

  double scale = 0.0;
  for (const Vec2& p : loop) scale = std::max(scale, std::max(std::fabs(p.x), std::fabs(p.y)));

  // Signed distance from the origin to each edge line; translate to the
  // centroid when the origin is outside or hugging the boundary.
  double min_dist = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < loop.size(); ++i) {
    Vec2 e = loop[(i + 1) % loop.size()] - loop[i];
    min_dist = std::min(min_dist, cross(e, Vec2{0.0, 0.0} - loop[i]) / e.len());
  }
  Vec2 offset{0.0, 0.0};
  if (!(min_dist > 1e-9 * scale)) {
    offset = loop_centroid(loop);
    for (Vec2& p : loop) p = p - offset;
  }

  ConvexCurve c;
  c.kind_ = Kind::polyline;
  c.poly_ = std::make_shared<ConvexPolygon>(std::move(loop));
  c.offset_ = offset;
  c.desc_ = "polyline[" + std::to_string(c.poly_->size()) + "]";
  return c;
}

ConvexCurve ConvexCurve::from_spline_samples(std::vector<double> knots,
                                             std::vector<double> values,
                                             std::string tag) {
  PeriodicSpline h(knots, values, kTau);

  std::size_t g = std::max<std::size_t>(8 * knots.size(), 8192);
  auto scan = [g](const PeriodicSpline& s, double& hmin, double& hmax,
                  double& cmin) {
    hmin = cmin = std::numeric_limits<double>::infinity();
    hmax = 0.0;
    for (std::size_t k = 0; k < g; ++k) {
      double th = kTau * static_cast<double>(k) / static_cast<double>(g);
      double hv = s.eval(th);
      hmin = std::min(hmin, hv);
      hmax = std::max(hmax, std::fabs(hv));
      cmin = std::min(cmin, hv + s.deriv2(th));
    }
  };
  double hmin, hmax, cmin;
  scan(h, hmin, hmax, cmin);
  if (!(cmin > 1e-12 * hmax))
    throw std::domain_error(
        "support samples are not strictly convex (min h + h'' = " +
        fmt("%.3g)", cmin));

  // The samples describe a valid body even when the origin is outside it
  // (negative h); in that case translate to the body's centroid, computed
  // from the envelope boundary.
  Vec2 offset{0.0, 0.0};
  if (!(hmin > 1e-9 * hmax)) {
    std::vector<Vec2> ring(g);
    for (std::size_t k = 0; k < g; ++k) {
      double th = kTau * static_cast<double>(k) / static_cast<double>(g);
      Vec2 e = dir_of(th);
      ring[k] = h.eval(th) * e + h.deriv(th) * e.perp();
    }
    offset = loop_centroid(ring);
    for (std::size_t i = 0; i < knots.size(); ++i)
      values[i] -= offset.x * std::cos(knots[i]) + offset.y * std::sin(knots[i]);
    h = PeriodicSpline(knots, values, kTau);
    scan(h, hmin, hmax, cmin);
    if (!(hmin > 0.0) || !(cmin > 1e-12 * hmax))
      throw std::domain_error(
          "support samples do not bound the origin even after recentring");
  }

  ConvexCurve c;
  c.kind_ = Kind::support_fn;
  c.h_ = std::make_shared<PeriodicSpline>(std::move(h));
  c.offset_ = offset;
  c.desc_ = tag.empty() ? "support_fn[" + std::to_string(knots.size()) + "]"
                        : std::move(tag);
  return c;
}

ConvexCurve ConvexCurve::from_support_samples(const std::vector<double>& angles,
                                              const std::vector<double>& values) {
  if (angles.size() != values.size() || angles.size() < 8)
    throw std::invalid_argument("need at least 8 support samples");
  for (std::size_t i = 0; i < angles.size(); ++i) {
    if (angles[i] < 0.0 || angles[i] >= kTau ||
        (i > 0 && angles[i] <= angles[i - 1]))
      throw std::invalid_argument(
          "support angles must be strictly increasing in [0, 2*pi)");
  }
  return from_spline_samples(angles, values, {});
}

ConvexCurve ConvexCurve::from_support_function(
    const std::function<double(double)>& h, std::size_t grid, std::string tag) {
  grid = std::max<std::size_t>(grid, 64);
  std::vector<double> knots(grid), values(grid);
  for (std::size_t k = 0; k < grid; ++k) {
    knots[k] = kTau * static_cast<double>(k) / static_cast<double>(grid);
    values[k] = h(knots[k]);
  }
  return from_spline_samples(std::move(knots), std::move(values),
                             std::move(tag));
}

ConvexCurve ConvexCurve::unit_circle(const NormedPlane& plane, std::size_t n) {
  const UnitBall& ball = *plane.ball;
  if (ball.polygonal()) {
    std::vector<Vec2> verts;
    for (double b : ball.boundary_breaks()) verts.push_back(ball.boundary_point(b));
    ConvexCurve c = from_polyline(std::move(verts));
    c.desc_ = "unit_circle/" + ball.describe();
    return c;
  }
  // The ball is already a certified convex body, so ingest its support
  // function without the sample-convexity re-check.  That check inspects the
  // interpolating spline, whose second derivative overshoots near curvature
  // blowups (lp flat points, p > 2) and would reject a perfectly convex ball.
  n = std::max<std::size_t>(n, 64);
  std::vector<double> knots(n), values(n);
  for (std::size_t k = 0; k < n; ++k) {
    knots[k] = kTau * static_cast<double>(k) / static_cast<double>(n);
    values[k] = ball.support(dir_of(knots[k]));
  }
  ConvexCurve c;
  c.kind_ = Kind::support_fn;
  c.h_ = std::make_shared<PeriodicSpline>(std::move(knots), std::move(values),
                                          kTau);
  c.desc_ = "unit_circle/" + ball.describe();
  return c;
}

ConvexCurve ConvexCurve::reuleaux_triangle(double width, std::size_t n) {
  if (!(width > 0.0)) throw std::invalid_argument("width must be positive");
  double r = width / std::sqrt(3.0);
  // Corners at 90, 210, 330 degrees; the arc opposite each corner is centred
  // on it with radius = width.  Each arc spans 60 degrees.
  const double corner[3] = {std::numbers::pi / 2.0,
                            std::numbers::pi * 7.0 / 6.0,
                            std::numbers::pi * 11.0 / 6.0};
  std::size_t m = std::max<std::size_t>(n / 3, 32);
  std::vector<Vec2> pts;
  pts.reserve(3 * m);
  for (int arc = 0; arc < 3; ++arc) {
    // Arc from corner `arc` to corner `arc+1`, centred at corner `arc+2`.
    Vec2 center = r * dir_of(corner[(arc + 2) % 3]);
    Vec2 start = r * dir_of(corner[arc]);
    double phi0 = (start - center).angle();
    for (std::size_t j = 0; j < m; ++j) {
      double phi = phi0 + (std::numbers::pi / 3.0) * static_cast<double>(j) /
                              static_cast<double>(m);
      pts.push_back(center + width * dir_of(phi));
    }
  }
  ConvexCurve c = from_polyline(std::move(pts));
  c.desc_ = fmt("reuleaux(width=%.9g)", width);
  return c;
}

ConvexCurve ConvexCurve::ellipse(double a, double b, std::size_t grid) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::invalid_argument("ellipse semi-axes must be positive");
  ConvexCurve c = from_support_function(
      [a, b](double th) {
        double cs = std::cos(th), sn = std::sin(th);
        return std::sqrt(a * a * cs * cs + b * b * sn * sn);
      },
      grid, fmt("ellipse(a=%.9g,b=%.9g)", a, b));
  return c;
}

double ConvexCurve::support(Vec2 u) const {
  if (kind_ == Kind::polyline) return poly_->support(u);
  double len = u.len();
  if (len == 0.0) return 0.0;
  return len * h_->eval(u.angle());
}

Vec2 ConvexCurve::support_point(Vec2 u) const {
  if (kind_ == Kind::polyline)
    return poly_->vertices()[poly_->support_vertex(u)];
  double th = u.angle();
  double hv = h_->eval(th), hd = h_->deriv(th);
  Vec2 e = dir_of(th);
  return hv * e + hd * e.perp();
}

std::vector<Vec2> ConvexCurve::sample_boundary(std::size_t n) const {
  if (kind_ == Kind::polyline) return poly_->vertices();
  n = std::max<std::size_t>(n, 16);
  std::vector<Vec2> pts(n);
  for (std::size_t k = 0; k < n; ++k) {
    double th = kTau * static_cast<double>(k) / static_cast<double>(n);
    Vec2 e = dir_of(th);
    pts[k] = h_->eval(th) * e + h_->deriv(th) * e.perp();
  }
  return pts;
}

double ConvexCurve::area() const {
  if (kind_ == Kind::polyline) return poly_->area();
  // A = 1/2 integral (h^2 - h'^2); h h'' integrates to -h'^2 by parts.
  std::size_t g = 8192;
  double acc = 0.0;
  for (std::size_t k = 0; k < g; ++k) {
    double th = kTau * static_cast<double>(k) / static_cast<double>(g);
    double hv = h_->eval(th), hd = h_->deriv(th);
    acc += hv * hv - hd * hd;
  }
  return 0.5 * acc * kTau / static_cast<double>(g);
}

const ConvexPolygon& ConvexCurve::polygon() const {
  if (kind_ != Kind::polyline)
    throw std::logic_error("curve has no polygon representation");
  return *poly_;
}

const PeriodicSpline& ConvexCurve::support_spline() const {
  if (kind_ != Kind::support_fn)
    throw std::logic_error("curve has no support-function representation");
  return *h_;
}

std::string ConvexCurve::fingerprint() const {
  std::uint64_t hash = 1469598103934665603ull;
  auto mix = [&hash](const void* p, std::size_t bytes) {
    hash = fnv1a64(p, bytes, hash);
  };
  if (kind_ == Kind::polyline) {
    const auto& v = poly_->vertices();
    mix(v.data(), v.size() * sizeof(Vec2));
  } else {
    const auto& k = h_->knots();
    const auto& v = h_->values();
    mix(k.data(), k.size() * sizeof(double));
    mix(v.data(), v.size() * sizeof(double));
  }
  mix(&offset_, sizeof(offset_));
  char buf[32];
  std::snprintf(buf, sizeof(buf), "#%016llx",
                static_cast<unsigned long long>(hash));
  return desc_ + buf;
}

}  // namespace minkgeo
