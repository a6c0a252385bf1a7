#include "minkgeo/convex_polygon.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace minkgeo {

namespace {

constexpr double kPi = 3.14159265358979323846;

double loop_scale(const std::vector<Vec2>& pts) {
  double s = 0.0;
  for (Vec2 p : pts) s = std::max(s, std::max(std::fabs(p.x), std::fabs(p.y)));
  return s > 0.0 ? s : 1.0;
}

double signed_area(const std::vector<Vec2>& pts) {
  double a = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    a += pts[i].cross(pts[(i + 1) % pts.size()]);
  return 0.5 * a;
}

}  // namespace

std::vector<Vec2> canonicalize_convex_loop(std::vector<Vec2> pts) {
  if (pts.size() >= 2 && dist(pts.front(), pts.back()) == 0.0) pts.pop_back();
  if (pts.size() < 3)
    throw std::invalid_argument("convex loop: need at least 3 vertices");

  const double scale = loop_scale(pts);
  const double eps_pt = 1e-12 * scale;

  if (signed_area(pts) < 0.0) std::reverse(pts.begin(), pts.end());

  // Drop consecutive duplicates, then collinear middles.  Repeat until
  // stable; removing a vertex can expose a new collinear run.
  bool changed = true;
  while (changed && pts.size() >= 3) {
    changed = false;
    std::vector<Vec2> out;
    out.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      Vec2 prev = pts[(i + pts.size() - 1) % pts.size()];
      Vec2 cur = pts[i];
      Vec2 next = pts[(i + 1) % pts.size()];
      if (dist(cur, next) <= eps_pt) {
        changed = true;
        continue;  // duplicate of its successor
      }
      Vec2 e0 = cur - prev, e1 = next - cur;
      // A zero e0 means prev is a duplicate being dropped this same pass;
      // keep cur so the pair does not annihilate completely.
      if (e0.len() > eps_pt &&
          cross(e0, e1) <= 1e-12 * e0.len() * e1.len()) {
        changed = true;
        continue;  // collinear (or reflex at noise level): drop
      }
      out.push_back(cur);
    }
    pts.swap(out);
  }
  if (pts.size() < 3)
    throw std::invalid_argument("convex loop: degenerate after cleanup");

  for (std::size_t i = 0; i < pts.size(); ++i) {
    Vec2 e0 = pts[i] - pts[(i + pts.size() - 1) % pts.size()];
    Vec2 e1 = pts[(i + 1) % pts.size()] - pts[i];
    if (cross(e0, e1) <= 0.0)
      throw std::invalid_argument("convex loop: not convex");
  }
  return pts;
}

ConvexPolygon::ConvexPolygon(std::vector<Vec2> vertices)
    : v_(canonicalize_convex_loop(std::move(vertices))) {
  const std::size_t n = v_.size();

  area_ = signed_area(v_);
  if (!(area_ > 1e-18))
    throw std::invalid_argument("convex polygon: vanishing area");
  double cx = 0.0, cy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = v_[i], b = v_[(i + 1) % n];
    const double w = a.cross(b);
    cx += (a.x + b.x) * w;
    cy += (a.y + b.y) * w;
  }
  centroid_ = Vec2(cx, cy) / (6.0 * area_);

  n_.resize(n);
  d_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e = v_[(i + 1) % n] - v_[i];
    n_[i] = e.perp_cw().normalized();
    d_[i] = v_[i].dot(n_[i]);
    if (!(d_[i] > 0.0))
      throw std::invalid_argument(
          "convex polygon: origin not strictly interior");
  }

  auto unwrap = [](std::vector<double>& t) {
    for (std::size_t i = 1; i < t.size(); ++i)
      while (t[i] <= t[i - 1]) t[i] += 2.0 * kPi;
    if (!(t.back() < t.front() + 2.0 * kPi))
      throw std::invalid_argument("convex polygon: angle fan not monotone");
  };
  vang_.resize(n);
  for (std::size_t i = 0; i < n; ++i) vang_[i] = v_[i].angle();
  unwrap(vang_);
  nang_.resize(n);
  for (std::size_t i = 0; i < n; ++i) nang_[i] = n_[i].angle();
  unwrap(nang_);
}

std::size_t ConvexPolygon::fan_locate(const std::vector<double>& table,
                                      double ang) {
  const double lo = table.front();
  double t = std::fmod(ang - lo, 2.0 * kPi);
  if (t < 0.0) t += 2.0 * kPi;
  t += lo;
  auto it = std::upper_bound(table.begin(), table.end(), t);
  if (it == table.begin()) return table.size() - 1;  // t == lo edge case
  return std::size_t(it - table.begin()) - 1;
}

std::size_t ConvexPolygon::edge_for_ray(Vec2 d) const {
  return fan_locate(vang_, d.angle());
}

double ConvexPolygon::gauge(Vec2 w) const {
  if (w.x == 0.0 && w.y == 0.0) return 0.0;
  const std::size_t i = fan_locate(vang_, w.angle());
  const Vec2 a = v_[i], b = v_[(i + 1) % v_.size()];
  // w = alpha a + beta b with alpha, beta >= 0; the gauge is alpha + beta.
  return (cross(w, b) + cross(a, w)) / cross(a, b);
}

std::size_t ConvexPolygon::support_vertex(Vec2 u) const {
  const std::size_t j = fan_locate(nang_, u.angle());
  return (j + 1) % v_.size();
}

double ConvexPolygon::support(Vec2 u) const {
  if (u.x == 0.0 && u.y == 0.0) return 0.0;
  return v_[support_vertex(u)].dot(u);
}

ConvexPolygon ConvexPolygon::polar() const {
  std::vector<Vec2> q(n_.size());
  for (std::size_t i = 0; i < n_.size(); ++i) q[i] = n_[i] / d_[i];
  return ConvexPolygon(std::move(q));
}

bool ConvexPolygon::is_origin_symmetric(double rel_tol) const {
  for (const Vec2& v : v_)
    if (std::fabs(gauge(-v) - 1.0) > rel_tol) return false;
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>>
ConvexPolygon::antipodal_pairs() const {
  const std::size_t n = v_.size();
  // Vertex i supports exactly the directions in [nang_{i-1}, nang_i]
  // (unwrapped).  A pair (i, j) admits parallel support lines iff the cone
  // of i meets the cone of j shifted by pi, circularly.
  std::vector<double> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = (i == 0) ? nang_[n - 1] - 2.0 * kPi : nang_[i - 1];
    hi[i] = nang_[i];
  }
  // J list: cones shifted by pi, plus a -2pi copy so circular overlaps
  // become plain interval overlaps on the line.
  struct Iv {
    double lo, hi;
    std::size_t idx;
  };
  std::vector<Iv> J;
  J.reserve(2 * n);
  for (std::size_t j = 0; j < n; ++j)
    J.push_back({lo[j] + kPi - 2.0 * kPi, hi[j] + kPi - 2.0 * kPi, j});
  for (std::size_t j = 0; j < n; ++j)
    J.push_back({lo[j] + kPi, hi[j] + kPi, j});

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(3 * n);
  std::size_t start = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (start < J.size() && J[start].hi < lo[i]) ++start;
    for (std::size_t k = start; k < J.size() && J[k].lo <= hi[i]; ++k) {
      const std::size_t j = J[k].idx;
      const std::size_t a = std::min(i, j), b = std::max(i, j);
      if (a != b) pairs.emplace_back(a, b);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

}  // namespace minkgeo
