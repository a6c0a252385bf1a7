/// Acceptance gate: ten behavioral criteria, one pass/fail line each.
/// Exits nonzero if any criterion fails.

#include "minkgeo/circle_path.hpp"
#include "minkgeo/convex_curve.hpp"
#include "minkgeo/curvature.hpp"
#include "minkgeo/curve_ops.hpp"
#include "minkgeo/plane.hpp"
#include "minkgeo/synthesis.hpp"
#include "minkgeo/unit_ball.hpp"
#include "minkgeo/verify.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace minkgeo;

namespace {

constexpr double kPi = 3.14159265358979323846;

int g_failures = 0;

void report(int idx, bool ok, const char* what) {
  std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", idx, what);
  if (!ok) ++g_failures;
}

std::vector<Vec2> regular_polygon(int k, double circumradius,
                                  double phase = 0.0) {
  std::vector<Vec2> v;
  for (int i = 0; i < k; ++i)
    v.push_back(circumradius * dir_of(phase + 2.0 * kPi * i / k));
  return v;
}

std::vector<Vec2> lp_quarter_arc(double p, int samples = 32) {
  std::vector<Vec2> arc;
  for (int i = 0; i <= samples; ++i) {
    double t = 0.5 * kPi * i / samples;
    arc.push_back({std::pow(std::cos(t), 2.0 / p),
                   std::pow(std::sin(t), 2.0 / p)});
  }
  arc.front() = {1.0, 0.0};
  arc.back() = {0.0, 1.0};
  return arc;
}

// Random smooth convex body: support 1 + a few harmonics, scaled so that
// h + h'' >= 1 - 0.45 > 0 is certified in advance.
ConvexCurve random_convex_curve(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 4), order(2, 7);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  struct Term {
    int k;
    double a, b;
  };
  std::vector<Term> terms;
  double mass = 0.0;
  int m = count(rng);
  for (int i = 0; i < m; ++i) {
    Term t{order(rng), coeff(rng), coeff(rng)};
    terms.push_back(t);
    mass += (t.k * t.k - 1.0) * std::hypot(t.a, t.b);
  }
  double scale = 0.45 / mass;
  auto h = [terms, scale](double th) {
    double acc = 1.0;
    for (const Term& t : terms)
      acc += scale * (t.a * std::cos(t.k * th) + t.b * std::sin(t.k * th));
    return acc;
  };
  return ConvexCurve::from_support_function(h, 2048);
}

NormedPlane hexagon_plane_normalized() {
  return radon_normalize(make_plane(make_polygon_ball(regular_polygon(6, 1.0))));
}

ConvexCurve synthesized_cw(const NormedPlane& plane, double width,
                           std::vector<std::pair<int, double>> harmonics) {
  WidthSynthesisSpec spec;
  spec.width = width;
  spec.harmonics = std::move(harmonics);
  return build_constant_width_curve(plane, spec);
}

// Glued planes have curvature-flat quadrant seams, so the prescription must
// be flat to second order there; plain cosine harmonics fold the support fan.
ConvexCurve seam_safe_cw(const NormedPlane& plane, double width,
                         double amplitude) {
  PathPtr path = parametrize_unit_circle(plane);
  double u_seam = path->length_at_boundary_param(0.5 * kPi);
  auto mix =
      oracle::seam_safe_harmonics(path->total_length(), u_seam, amplitude);
  WidthSynthesisSpec spec;
  spec.width = width;
  spec.harmonics = mix.cosines;
  spec.sin_harmonics = mix.sines;
  return build_constant_width_curve(plane, spec);
}

// 1. Length bound in the Euclidean plane over random certified-convex curves.
void criterion_1() {
  auto t0 = std::chrono::steady_clock::now();
  NormedPlane plane = make_lp_plane(2.0);
  std::mt19937_64 rng(20250821);
  bool ok = true;
  for (int i = 0; i < 50 && ok; ++i) {
    ConvexCurve curve = random_convex_curve(rng);
    double l = curve_length(plane, curve, 4096);
    double bound = kPi * diameter(plane, curve, 4096).value;
    ok = l <= bound + 1e-4 * bound;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              t0)
                    .count();
  ok = ok && secs < 30.0;
  report(1, ok,
         "Euclid: 50 random convex curves obey l <= pi*diam (n=4096, <30s)");
}

// 2. Barbier anchors: Reuleaux in Euclid, harmonic body in a glued plane.
void criterion_2() {
  double l_reuleaux =
      curve_length(make_lp_plane(2.0), ConvexCurve::reuleaux_triangle(1.0));
  bool ok = std::fabs(l_reuleaux - kPi) <= 1e-3 * kPi;

  NormedPlane glue = build_radon_plane(lp_quarter_arc(3.0));
  ConvexCurve body = seam_safe_cw(glue, 1.0, 0.02);
  double l = curve_length(glue, body);
  double target = 0.5 * circle_perimeter(glue);
  ok = ok && std::fabs(l - target) <= 1e-3 * target;
  report(2, ok,
         "Barbier: Reuleaux length pi; glued-plane harmonic body d*l(S)/2");
}

// 3. Equality flag == constant width across a corpus on Radon planes.
void criterion_3() {
  std::vector<NormedPlane> planes{radon_normalize(make_lp_plane(2.0)),
                                  hexagon_plane_normalized(),
                                  build_radon_plane(lp_quarter_arc(3.0))};
  int cw_count = 0, ncw_count = 0, disagreements = 0;
  for (std::size_t pi = 0; pi < planes.size(); ++pi) {
    const NormedPlane& plane = planes[pi];
    const bool glued = pi == 2;
    std::vector<ConvexCurve> corpus{
        ConvexCurve::unit_circle(plane),
        glued ? seam_safe_cw(plane, 1.0, 0.02)
              : synthesized_cw(plane, 1.0, {{1, 0.05}}),
        glued ? seam_safe_cw(plane, 1.0, 0.01)
              : synthesized_cw(plane, 1.0, {{3, 0.02}}),
        glued ? seam_safe_cw(plane, 2.0, 0.04)
              : synthesized_cw(plane, 2.0, {{3, 0.05}, {5, 0.015}}),
        ConvexCurve::ellipse(1.0, 0.5),
        ConvexCurve::ellipse(1.0, 0.8),
        ConvexCurve::from_polyline({{0.9, 0.9},
                                    {-0.9, 0.9},
                                    {-0.9, -0.9},
                                    {0.9, -0.9}}),
        ConvexCurve::from_support_function(
            [](double th) { return 1.0 + 0.08 * std::cos(2.0 * th); }, 1024)};
    for (const ConvexCurve& curve : corpus) {
      bool cw = is_constant_width(plane, curve).first;
      (cw ? cw_count : ncw_count) += 1;
      VerificationReport r = verify_rosenthal_szasz(plane, curve);
      if (r.equality != cw) ++disagreements;
    }
  }
  bool ok = cw_count >= 10 && ncw_count >= 10 && disagreements == 0;
  report(3, ok,
         "equality flag matches is_constant_width over >=10+10 curves, "
         "3 Radon planes");
}

// 4. Anti-norm length bound on non-Radon planes; square worked case.
void criterion_4() {
  std::vector<NormedPlane> planes{
      make_plane(make_polygon_ball({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}})),
      make_lp_plane(1.0), make_lp_plane(4.0)};
  bool ok = true;
  for (const NormedPlane& plane : planes) {
    std::vector<ConvexCurve> corpus{
        ConvexCurve::unit_circle(plane),
        ConvexCurve::ellipse(1.0, 0.5),
        ConvexCurve::ellipse(1.0, 0.8),
        ConvexCurve::ellipse(2.0, 1.2),
        ConvexCurve::reuleaux_triangle(1.0),
        ConvexCurve::from_polyline({{1, 0}, {0, 1}, {-1, -1}}),
        ConvexCurve::from_polyline({{0.9, 0.9},
                                    {-0.9, 0.9},
                                    {-0.9, -0.9},
                                    {0.9, -0.9}}),
        ConvexCurve::from_polyline(regular_polygon(5, 1.0, 0.4)),
        ConvexCurve::from_support_function(
            [](double th) { return 1.0 + 0.1 * std::cos(2.0 * th); }, 1024),
        ConvexCurve::from_support_function(
            [](double th) { return 1.0 + 0.05 * std::cos(3.0 * th); }, 1024)};
    for (const ConvexCurve& curve : corpus) {
      VerificationReport r = verify_antinorm_bound(plane, curve);
      ok = ok && r.slack >= -1e-4 * r.bound;
    }
  }
  NormedPlane square = planes[0];
  VerificationReport eq =
      verify_antinorm_bound(square, ConvexCurve::unit_circle(square));
  ok = ok && std::fabs(eq.lhs - 8.0) <= 1e-6 && std::fabs(eq.bound - 8.0) <= 1e-6;
  report(4, ok,
         "anti-norm bound on square/l1/l4 x 10 curves; square circle "
         "lhs=bound=8");
}

// 5. Dual bound: coincides with the Radon report on Radon planes; square
// worked values.
void criterion_5() {
  bool ok = true;
  std::vector<NormedPlane> planes{radon_normalize(make_lp_plane(2.0)),
                                  hexagon_plane_normalized(),
                                  build_radon_plane(lp_quarter_arc(3.0))};
  for (std::size_t pi = 0; pi < planes.size(); ++pi) {
    const NormedPlane& plane = planes[pi];
    ConvexCurve cw = pi == 2 ? seam_safe_cw(plane, 1.0, 0.02)
                             : synthesized_cw(plane, 1.0, {{3, 0.02}});
    for (const ConvexCurve& curve :
         {ConvexCurve::ellipse(1.0, 0.6), ConvexCurve::unit_circle(plane),
          cw}) {
      VerificationReport rs = verify_rosenthal_szasz(plane, curve);
      VerificationReport dual = verify_dual_bound(plane, curve);
      ok = ok && std::fabs(rs.lhs - dual.lhs) <= 1e-4 * rs.lhs;
      ok = ok && std::fabs(rs.bound - dual.bound) <= 1e-4 * rs.bound;
    }
  }
  NormedPlane square =
      make_plane(make_polygon_ball({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}));
  VerificationReport r =
      verify_dual_bound(square, ConvexCurve::unit_circle(square));
  ok = ok && std::fabs(r.lhs - 8.0) <= 1e-6 && std::fabs(r.bound - 16.0) <= 1e-6;
  report(5, ok,
         "dual bound == Radon bound on Radon planes; square circle 8 vs 16");
}

// 6. The anti-norm involution returns the original norm.
void criterion_6() {
  bool ok = true;
  for (const NormedPlane& plane :
       {make_plane(make_polygon_ball({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}})),
        make_lp_plane(4.0),
        make_plane(make_polygon_ball(regular_polygon(6, 1.0))),
        make_plane(make_radon_glue_ball(lp_quarter_arc(3.0)), 1.2)}) {
    NormedPlane twice = antinorm_unit_ball(antinorm_unit_ball(plane));
    for (int i = 0; i < 360 && ok; ++i) {
      Vec2 v = dir_of(2.0 * kPi * i / 360.0);
      double n = norm_eval(plane, v);
      ok = std::fabs(norm_eval(twice, v) - n) <= 1e-4 * n;
    }
  }
  report(6, ok,
         "double anti-norm == norm within 1e-4 over 360 directions, 4 planes");
}

// 7. Kepler law on every Radon-normalizable plane in the corpus.
void criterion_7() {
  std::vector<double> angles, values;
  for (int i = 0; i < 256; ++i) {
    double th = 2.0 * kPi * i / 256.0;
    angles.push_back(th);
    values.push_back(std::sqrt(std::cos(th) * std::cos(th) +
                               0.49 * std::sin(th) * std::sin(th)));
  }
  std::vector<NormedPlane> corpus{
      make_lp_plane(2.0, 2.0),
      make_plane(make_polygon_ball(regular_polygon(6, 1.0)), 0.5),
      build_radon_plane(lp_quarter_arc(3.0)),
      build_radon_plane(lp_quarter_arc(1.5)),
      make_plane(make_support_ball(angles, values))};
  bool ok = true;
  for (const NormedPlane& raw : corpus) {
    NormedPlane plane = radon_normalize(raw);
    PathPtr path = parametrize_unit_circle(plane);
    ok = ok && kepler_deviation(plane, *path) <= 1e-4;

    // integral of omega(phi, phi') du against twice the omega-area.
    double L = path->total_length();
    std::size_t n = path->resolution();
    double integral = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      integral += symplectic_form(plane, path->points()[i],
                                  path->tangents()[i]) *
                  (L / double(n));
    double twice_area = plane.omega_scale * path->twice_area();
    ok = ok && std::fabs(integral - twice_area) <= 1e-3 * twice_area;
  }
  report(7, ok,
         "kepler_deviation <= 1e-4 and swept integral == 2*area, all corpus "
         "planes");
}

// 8. Curvature radii at antipodal parameters sum to the width.
void criterion_8() {
  NormedPlane plane = make_lp_plane(2.0);
  ConvexCurve body = synthesized_cw(plane, 1.0, {{3, 0.03}, {5, 0.008}});
  VerificationReport r = verify_curvature_sum(plane, body, 4096, 1e-2, 256);
  bool ok = r.lhs <= r.bound && r.equality && r.holds();
  report(8, ok,
         "smooth Euclid constant-width body: max|rho(s0)+rho(s1)-d| <= "
         "1e-2*d over 256 pairs");
}

// 9. Golab sanity bracket for every plane used anywhere above.
void criterion_9() {
  std::vector<double> angles, values;
  for (int i = 0; i < 256; ++i) {
    double th = 2.0 * kPi * i / 256.0;
    angles.push_back(th);
    values.push_back(std::sqrt(std::cos(th) * std::cos(th) +
                               0.49 * std::sin(th) * std::sin(th)));
  }
  std::vector<NormedPlane> corpus{
      make_lp_plane(2.0),
      make_lp_plane(1.0),
      make_lp_plane(1.5),
      make_lp_plane(4.0),
      make_lp_plane(64.0),
      make_plane(make_polygon_ball({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}})),
      make_plane(make_polygon_ball(regular_polygon(6, 1.0))),
      make_plane(make_polygon_ball(regular_polygon(12, 1.0, 0.3))),
      build_radon_plane(lp_quarter_arc(3.0)),
      build_radon_plane(lp_quarter_arc(1.5)),
      make_plane(make_support_ball(angles, values)),
      make_plane(smooth_approximate(
          make_polygon_ball({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}), 0.01))};
  bool ok = true;
  for (const NormedPlane& plane : corpus) {
    double l = circle_perimeter(plane);
    ok = ok && l >= 6.0 - 1e-3 && l <= 8.0 + 1e-3;
  }
  report(9, ok, "every corpus plane has l(S) in [6 - 1e-3, 8 + 1e-3]");
}

// 10. Exact agreement with brute-force oracles on regular polygons.
void criterion_10() {
  bool ok = true;
  NormedPlane euclid = make_lp_plane(2.0);
  for (int k = 3; k <= 12 && ok; ++k) {
    auto verts = regular_polygon(k, 1.0, 0.1);
    NormedPlane plane = make_plane(make_polygon_ball(verts));
    const auto* poly = dynamic_cast<const PolygonBall*>(plane.ball.get());
    const std::vector<Vec2>& loop = poly->geometry().vertices();
    for (int i = 0; i < 360 && ok; ++i) {
      Vec2 v = dir_of(2.0 * kPi * i / 360.0) * 1.3;
      double want = oracle::vertex_antinorm(1.0, loop, v);
      ok = std::fabs(antinorm_eval(plane, v) - want) <= 1e-12;
    }

    ConvexCurve curve = ConvexCurve::from_polyline(verts);
    auto pts = curve.sample_boundary(0);
    for (const NormedPlane& metric_plane : {euclid, plane}) {
      auto metric = [&metric_plane](Vec2 v) {
        return norm_eval(metric_plane, v);
      };
      double want = oracle::allpairs_diameter(pts, metric);
      ok = ok && diameter(metric_plane, curve).value == want;
    }
  }
  report(10, ok,
         "regular n-gons (n<=12): anti-norm == vertex max to 1e-12, diameter "
         "== all-pairs scan exactly");
}

}  // namespace

int main() {
  std::printf("=== Acceptance criteria ===\n");
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (g_failures == 0)
    std::printf("All 10 acceptance criteria passed.\n");
  else
    std::printf("%d acceptance criteria FAILED.\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
