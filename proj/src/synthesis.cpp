#include "minkgeo/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "minkgeo/circle_path.hpp"
#include "minkgeo/curve_ops.hpp"
#include "minkgeo/periodic_spline.hpp"

namespace minkgeo {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

std::string fmt2(const char* pattern, double a, double b) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), pattern, a, b);
  return buf;
}

void require_radon_normalized(const NormedPlane& plane) {
  auto [radon, witness] = is_radon(plane);
  (void)witness;
  if (!radon)
    throw std::invalid_argument(
        "constant-width synthesis needs a Radon plane (anti-norm "
        "proportional to norm)");
  double ratio = antinorm_eval(plane, Vec2{1.0, 0.0}) /
                 norm_eval(plane, Vec2{1.0, 0.0});
  if (std::fabs(ratio - 1.0) > 1e-6)
    throw std::invalid_argument(
        "plane is Radon but not normalized (anti-norm/norm = " +
        fmt2("%.9g); apply radon_normalize", ratio, 0.0));
}

double prescribed_support(const WidthSynthesisSpec& spec, double u, double L) {
  double h = 0.5 * spec.width;
  for (auto [k, a] : spec.harmonics)
    h += a * std::cos(kTau * static_cast<double>(k) * u / L);
  for (auto [k, b] : spec.sin_harmonics)
    h += b * std::sin(kTau * static_cast<double>(k) * u / L);
  return h;
}

void validate_spec(const WidthSynthesisSpec& spec) {
  if (!(spec.width > 0.0)) throw std::invalid_argument("width must be positive");
  if (spec.n < 64) throw std::invalid_argument("resolution too small");
  for (const auto* list : {&spec.harmonics, &spec.sin_harmonics}) {
    for (auto [k, a] : *list) {
      (void)a;
      if (k < 1 || k % 2 == 0)
        throw std::invalid_argument(
            "harmonic " + std::to_string(k) +
            " breaks the antipodal width condition; only odd harmonics keep "
            "h(u) + h(u + L/2) constant");
    }
  }
}

// Intersection of the support lines <x, a> = p and <x, b> = q.
Vec2 line_intersect(Vec2 a, double p, Vec2 b, double q) {
  return (p * b.perp_cw() + q * a.perp()) / cross(a, b);
}

// Vertices of a polygon cut out by a subset of the support lines
// <x, e_i> = hs[i] at equally spaced normals.  Keeping all g lines would
// produce micro-edges far below the accuracy of the data, so a greedy walk
// drops lines while the roof point of each bracketing pair stays within
// slack of everything dropped in between.  When hs is antipodally equal the
// walk covers half the circle and is mirrored, so vertices come in exact
// +/- pairs.
std::vector<Vec2> support_line_polygon(const std::vector<double>& hs,
                                       double slack) {
  const std::size_t g = hs.size();
  auto e = [&](std::size_t i) {
    return dir_of(kTau * static_cast<double>(i % g) / static_cast<double>(g));
  };
  bool sym = g % 2 == 0;
  for (std::size_t i = 0; sym && i < g / 2; ++i) sym = hs[i] == hs[i + g / 2];
  const std::size_t span = sym ? g / 2 : g;
  std::vector<std::size_t> kept;
  kept.push_back(0);
  while (kept.back() < span) {
    std::size_t i = kept.back();
    std::size_t best = i + 1;
    std::size_t hi = std::min(span, i + g / 4);
    for (std::size_t j = i + 2; j <= hi; ++j) {
      Vec2 p = line_intersect(e(i), hs[i], e(j), hs[j % g]);
      bool ok = true;
      for (std::size_t m = i + 1; m < j && ok; ++m)
        ok = dot(p, e(m)) - hs[m % g] <= slack;
      if (!ok) break;
      best = j;
    }
    kept.push_back(best);
  }
  kept.pop_back();  // the terminal index restarts the next stretch
  std::vector<std::size_t> idx = kept;
  if (sym)
    for (std::size_t i : kept) idx.push_back(i + g / 2);
  std::vector<Vec2> verts(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    std::size_t a = idx[k], b = idx[(k + 1) % idx.size()];
    verts[k] = line_intersect(e(a), hs[a], e(b), hs[b]);
  }
  return verts;
}

ConvexCurve build_cw_smooth(const NormedPlane& plane,
                            const WidthSynthesisSpec& spec,
                            const ArcLengthPath& path) {
  double L = path.total_length();
  std::size_t n = path.resolution();
  std::vector<double> theta, values, us;
  theta.reserve(n);
  values.reserve(n);
  us.reserve(n);
  double prev = -std::numeric_limits<double>::infinity();
  double lift = 0.0, prev_raw = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double u = path.params()[i];
    double t = path.boundary_param_at(u);
    double raw = plane.ball->normal_angle(t);
    if (i == 0) {
      // Normal angles come back wrapped; start the lifted sweep at the
      // outward normal of the u = 0 point, which sits at angle ~0 for an
      // origin-symmetric ball.
      lift = raw > std::numbers::pi ? raw - kTau : raw;
      if (lift < 0.0 && lift > -1e-9) lift = 0.0;
    } else {
      double d = raw - prev_raw;
      if (d < -std::numbers::pi) d += kTau;
      if (d > std::numbers::pi) d -= kTau;
      lift += d;
    }
    prev_raw = raw;
    if (lift < 0.0 || lift <= prev + 1e-12) continue;  // clamp / duplicate
    prev = lift;
    theta.push_back(lift);
    us.push_back(u);
    values.push_back(prescribed_support(spec, u, L) *
                     plane.ball->support(dir_of(lift)));
  }
  if (theta.size() < 8 || theta.back() >= kTau)
    throw std::runtime_error("normal-angle sweep failed on the unit circle");

  // Certify convexity of the prescription before handing it to the curve
  // constructor, so rejections can name the parameter interval at fault.
  PeriodicSpline trial(theta, values, kTau);
  double hmax = 0.0;
  for (double v : values) hmax = std::max(hmax, std::fabs(v));
  double margin = 1e-6 * hmax;
  double bad_lo = std::numeric_limits<double>::infinity(), bad_hi = -bad_lo;
  double cmin = std::numeric_limits<double>::infinity();
  std::size_t fine = std::max<std::size_t>(4 * theta.size(), 8192);
  for (std::size_t j = 0; j < fine; ++j) {
    double th = kTau * static_cast<double>(j) / static_cast<double>(fine);
    double r = trial.eval(th) + trial.deriv2(th);
    cmin = std::min(cmin, r);
    if (r < margin) {
      // Map the violating direction back to the circle parameter interval.
      auto it = std::upper_bound(theta.begin(), theta.end(), th);
      std::size_t idx = it == theta.begin()
                            ? theta.size() - 1
                            : static_cast<std::size_t>(it - theta.begin()) - 1;
      bad_lo = std::min(bad_lo, us[idx]);
      bad_hi = std::max(bad_hi, us[std::min(idx + 1, us.size() - 1)]);
    }
  }
  if (cmin < margin)
    throw std::domain_error(
        "constant-width prescription is not convex for u in " +
        fmt2("[%.6g, %.6g]", bad_lo, bad_hi) +
        fmt2(" (min curvature proxy %.3g < margin %.3g)", cmin, margin));

  ConvexCurve curve = ConvexCurve::from_support_samples(theta, values);
  return curve;
}

ConvexCurve build_cw_polygon(const NormedPlane& plane,
                             const WidthSynthesisSpec& spec,
                             const ArcLengthPath& path) {
  auto* pb = dynamic_cast<const PolygonBall*>(plane.ball.get());
  if (!pb) throw std::logic_error("polygonal ball without polygon geometry");
  const ConvexPolygon& poly = pb->geometry();
  double L = path.total_length();
  std::size_t m = poly.size();

  // One support value per ball edge, taken at the edge midpoint's circle
  // parameter.  Antipodal edges then pair to width exactly, and between edge
  // normals both sides of the width ratio are linear in the direction, so
  // the polygon below has constant width in every direction.
  std::vector<double> offs(m), us(m);
  for (std::size_t j = 0; j < m; ++j) {
    Vec2 mid = (poly.vertices()[j] + poly.vertices()[(j + 1) % m]) * 0.5;
    double t = mid.angle();
    if (t < 0.0) t += kTau;
    double u = path.length_at_boundary_param(t);
    us[j] = u;
    offs[j] = prescribed_support(spec, u, L) * poly.edge_offset(j);
  }
  double omin = *std::min_element(offs.begin(), offs.end());
  if (!(omin > 0.0))
    throw std::domain_error(
        "constant-width prescription leaves no body (support " +
        fmt2("%.3g at u = %.6g)", omin,
             us[static_cast<std::size_t>(
                 std::min_element(offs.begin(), offs.end()) - offs.begin())]));

  std::vector<Vec2> verts(m);
  for (std::size_t j = 0; j < m; ++j) {
    std::size_t k = (j + 1) % m;
    verts[j] = line_intersect(poly.edge_normal(j), offs[j],
                              poly.edge_normal(k), offs[k]);
  }
  for (std::size_t j = 0; j < m; ++j) {
    Vec2 e0 = verts[j] - verts[(j + m - 1) % m];
    Vec2 e1 = verts[(j + 1) % m] - verts[j];
    if (cross(e0, e1) < -1e-12 * e0.len() * e1.len())
      throw std::domain_error(
          "constant-width prescription is not convex for u in " +
          fmt2("[%.6g, %.6g]", us[(j + m - 1) % m], us[(j + 1) % m]));
  }
  ConvexCurve curve = ConvexCurve::from_polyline(std::move(verts));
  return curve;
}

// Discrete wrapped-Gaussian smoothing of n uniform support samples;
// truncated kernel, weights normalized to unit sum so constants pass
// through unchanged.
std::vector<double> mollify(const std::vector<double>& h, double sigma) {
  std::size_t n = h.size();
  double step = kTau / static_cast<double>(n);
  auto taps = static_cast<std::ptrdiff_t>(std::ceil(5.0 * sigma / step));
  taps = std::min<std::ptrdiff_t>(taps, static_cast<std::ptrdiff_t>(n / 2));
  std::vector<double> w(static_cast<std::size_t>(taps) + 1);
  double total = 0.0;
  for (std::ptrdiff_t j = 0; j <= taps; ++j) {
    double x = static_cast<double>(j) * step / sigma;
    w[static_cast<std::size_t>(j)] = std::exp(-0.5 * x * x);
    total += (j == 0 ? 1.0 : 2.0) * w[static_cast<std::size_t>(j)];
  }
  for (double& v : w) v /= total;
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = w[0] * h[i];
    for (std::ptrdiff_t j = 1; j <= taps; ++j) {
      acc += w[static_cast<std::size_t>(j)] *
             (h[(i + static_cast<std::size_t>(j)) % n] +
              h[(i + n - static_cast<std::size_t>(j)) % n]);
    }
    out[i] = acc;
  }
  return out;
}

// Shrinks the kernel until the smoothed samples stay within `budget` of the
// originals in sup norm.  Reports the kernel width actually used so callers
// can check that their sample grid still resolves it.
std::vector<double> mollify_within(const std::vector<double>& h, double sigma0,
                                   double budget,
                                   double* sigma_used = nullptr) {
  double sigma = sigma0;
  for (int tries = 0; tries < 40; ++tries) {
    std::vector<double> out = mollify(h, sigma);
    double dev = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i)
      dev = std::max(dev, std::fabs(out[i] - h[i]));
    if (dev <= budget) {
      if (sigma_used) *sigma_used = sigma;
      return out;
    }
    sigma *= 0.5;
  }
  if (sigma_used) *sigma_used = 0.0;
  return h;  // kernel collapsed to (near-)identity
}

}  // namespace

ConvexCurve build_constant_width_curve(const NormedPlane& plane,
                                       const WidthSynthesisSpec& spec) {
  validate_spec(spec);
  require_radon_normalized(plane);
  PathPtr path = parametrize_unit_circle(plane, spec.n);

  double L = path->total_length();
  std::size_t probe = 512;
  for (std::size_t i = 0; i < probe; ++i) {
    double u = L * static_cast<double>(i) / static_cast<double>(probe);
    if (!(prescribed_support(spec, u, L) > 0.0))
      throw std::domain_error(
          fmt2("prescribed support is not positive at u = %.6g", u, 0.0));
  }

  ConvexCurve curve = plane.ball->polygonal()
                          ? build_cw_polygon(plane, spec, *path)
                          : build_cw_smooth(plane, spec, *path);

  auto [cw, d] = is_constant_width(plane, curve);
  if (!cw || std::fabs(d - spec.width) > 1e-3 * spec.width)
    throw std::runtime_error(
        fmt2("synthesized curve failed the width check (measured %.9g, "
             "wanted %.9g)",
             d, spec.width));
  return curve;
}

NormedPlane build_radon_plane(const std::vector<Vec2>& arc) {
  NormedPlane plane = make_plane(make_radon_glue_ball(arc), 1.0);
  return radon_normalize(plane);
}

BallPtr smooth_approximate(const BallPtr& ball, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");

  if (dynamic_cast<const RadonGlueBall*>(ball.get()) != nullptr) {
    // Smooth the support function, extract the rounded first-quadrant arc,
    // and re-glue so the result stays exactly Radon.  The glued ball is
    // polygonal (densely sampled); callers needing C2 should smooth the
    // ball without the Radon constraint instead.
    std::size_t g = 8192;
    std::vector<double> h(g);
    std::vector<Vec2> dirs(g);
    for (std::size_t i = 0; i < g; ++i) {
      dirs[i] = dir_of(kTau * static_cast<double>(i) / static_cast<double>(g));
      h[i] = ball->support(dirs[i]);
    }
    for (int tries = 0; tries < 12; ++tries) {
      double budget = epsilon / (4.0 * std::ldexp(1.0, tries));
      std::vector<double> hs = mollify_within(h, epsilon, budget);
      for (std::size_t i = 0; i < g / 2; ++i) {
        double s = 0.5 * (hs[i] + hs[i + g / 2]);
        hs[i] = hs[i + g / 2] = s;
      }
      // Boundary of the rounded body { x : <x, dirs[i]> <= hs[i] }, hit
      // along rays of the first quadrant.  A mollified support function is
      // again a support function, so every halfplane is active.
      std::size_t q = 1024;
      std::vector<Vec2> arc(q + 1);
      for (std::size_t k = 0; k <= q; ++k) {
        double th = 0.5 * std::numbers::pi * static_cast<double>(k) /
                    static_cast<double>(q);
        Vec2 d = dir_of(th);
        double gauge = 0.0;
        for (std::size_t i = 0; i < g; ++i) {
          double num = dot(d, dirs[i]);
          if (num > 0.0) gauge = std::max(gauge, num / hs[i]);
        }
        arc[k] = d / gauge;
      }
      // Pin the endpoints the gluing requires; the axis scales are small
      // perturbations of the same order as the smoothing itself.
      double sx = 1.0 / arc.front().x, sy = 1.0 / arc.back().y;
      for (Vec2& p : arc) p = Vec2{p.x * sx, p.y * sy};
      arc.front() = Vec2{1.0, 0.0};
      arc.back() = Vec2{0.0, 1.0};
      BallPtr reglued;
      try {
        reglued = make_radon_glue_ball(arc);
      } catch (const std::exception&) {
        continue;  // smoothing too coarse for a convex glue; shrink kernel
      }
      if (support_hausdorff(*reglued, *ball) <= epsilon) return reglued;
    }
    throw std::runtime_error(
        "could not fit a Radon-preserving smoothing inside epsilon");
  }

  // Refine the grid until the settled kernel width is well resolved; an
  // under-resolved kernel leaves the original kink visible to the spline.
  std::size_t g = 8192;
  std::vector<double> hs;
  for (;;) {
    std::vector<double> h(g);
    for (std::size_t i = 0; i < g; ++i)
      h[i] = ball->support(
          dir_of(kTau * static_cast<double>(i) / static_cast<double>(g)));
    double sigma = 0.0;
    hs = mollify_within(h, epsilon, epsilon / 4.0, &sigma);
    if (g >= (1u << 15) || (sigma > 0.0 && kTau / static_cast<double>(g) <=
                                               sigma / 8.0))
      break;
    g *= 2;
  }
  for (std::size_t i = 0; i < g / 2; ++i) {
    double s = 0.5 * (hs[i] + hs[i + g / 2]);
    hs[i] = hs[i + g / 2] = s;
  }
  for (double& v : hs) v += 0.5 * epsilon;
  try {
    return std::make_shared<SmoothBall>(std::vector<double>(hs));
  } catch (const std::invalid_argument&) {
    // At small epsilon a body this close to a polygon keeps curvature mass
    // ~1/epsilon concentrated at the old edge normals, which no uniform-knot
    // spline can certify convex.  Fall back to the exact polygon carved out
    // by the same smoothed support lines; it stays within the budget and
    // reports itself as polygonal.
    std::vector<Vec2> verts = support_line_polygon(hs, epsilon / 8.0);
    return std::make_shared<PolygonBall>(std::move(verts));
  }
}

ConvexCurve smooth_approximate(const ConvexCurve& curve, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  std::size_t g = 8192;
  std::vector<double> angles, hs;
  for (;;) {
    angles.resize(g);
    std::vector<double> h(g);
    for (std::size_t i = 0; i < g; ++i) {
      angles[i] = kTau * static_cast<double>(i) / static_cast<double>(g);
      h[i] = curve.support(dir_of(angles[i]));
    }
    double sigma = 0.0;
    hs = mollify_within(h, epsilon, epsilon / 4.0, &sigma);
    if (g >= (1u << 15) || (sigma > 0.0 && kTau / static_cast<double>(g) <=
                                               sigma / 8.0))
      break;
    g *= 2;
  }
  for (double& v : hs) v += 0.5 * epsilon;
  try {
    return ConvexCurve::from_support_samples(angles, hs);
  } catch (const std::invalid_argument&) {
    // Same escape hatch as the ball overload: curvature mass too tight for
    // the spline, so carve the polygon out of the smoothed support lines.
    return ConvexCurve::from_polyline(support_line_polygon(hs, epsilon / 8.0));
  }
}

double support_hausdorff(const UnitBall& a, const UnitBall& b, std::size_t n) {
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 u = dir_of(kTau * static_cast<double>(i) / static_cast<double>(n));
    worst = std::max(worst, std::fabs(a.support(u) - b.support(u)));
  }
  return worst;
}

double support_hausdorff(const ConvexCurve& a, const ConvexCurve& b,
                         std::size_t n) {
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 u = dir_of(kTau * static_cast<double>(i) / static_cast<double>(n));
    worst = std::max(worst, std::fabs(a.support(u) - b.support(u)));
  }
  return worst;
}

}  // namespace minkgeo
