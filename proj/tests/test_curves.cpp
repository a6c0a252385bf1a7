/// Unit tests for convex curves and their measurements:
///   - ingestion (polyline, support samples, builtins) and translation
///   - length against quadrature and closed-form oracles
///   - diameter against the all-pairs scan
///   - Minkowski support, width, constant-width detection
///   - circular curvature against analytic radii

#include "minkgeo/circle_path.hpp"
#include "minkgeo/convex_curve.hpp"
#include "minkgeo/curvature.hpp"
#include "minkgeo/curve_ops.hpp"
#include "minkgeo/plane.hpp"
#include "minkgeo/unit_ball.hpp"
#include "oracles.hpp"

#include <cassert>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

using namespace minkgeo;

namespace {

constexpr double kPi = 3.14159265358979323846;

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

NormedPlane square_plane(double c = 1.0) {
  return make_plane(make_polygon_ball({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}), c);
}

// Norm distance from the line {q + t*d} to the origin, by ternary search on
// the convex function t -> ||q + t*d||.
double line_distance_oracle(const NormedPlane& plane, Vec2 q, Vec2 d) {
  double lo = -1e3, hi = 1e3;
  for (int i = 0; i < 200; ++i) {
    double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (norm_eval(plane, q + m1 * d) < norm_eval(plane, q + m2 * d))
      hi = m2;
    else
      lo = m1;
  }
  return norm_eval(plane, q + 0.5 * (lo + hi) * d);
}

// ════════════════════════════════════════════════════════════════════
//  Ingestion
// ════════════════════════════════════════════════════════════════════

void test_polyline_ingestion_and_support() {
  std::printf("  polyline ingestion: support == vertex scan\n");

  std::vector<Vec2> tri{{1, 0}, {0, 1}, {-1, -1}};
  ConvexCurve curve = ConvexCurve::from_polyline(tri);
  assert(curve.kind() == ConvexCurve::Kind::polyline);
  assert(close(curve.ingestion_offset().len(), 0.0, 1e-12));
  for (int i = 0; i < 360; ++i) {
    Vec2 d = dir_of(2.0 * kPi * i / 360.0);
    assert(close(curve.support(d), oracle::vertex_support(tri, d), 1e-12));
  }
}

void test_offset_ingestion_translates() {
  std::printf("  curves away from the origin are translated on ingestion\n");

  std::vector<Vec2> tri{{5, 5}, {7, 5}, {6, 7}};
  ConvexCurve curve = ConvexCurve::from_polyline(tri);
  Vec2 off = curve.ingestion_offset();
  assert(off.len() > 1.0);  // it really moved
  // stored + offset recovers the original vertices.
  for (Vec2 p : curve.sample_boundary(0)) {
    Vec2 back = p + off;
    bool hit = false;
    for (Vec2 q : tri) hit = hit || (back - q).len() < 1e-9;
    assert(hit);
  }
  // Translation-invariant quantities are unchanged.
  ConvexCurve centered = ConvexCurve::from_polyline(
      {{-1, -1}, {1, -1}, {0, 1}});
  NormedPlane plane = make_lp_plane(2.0);
  assert(close(curve_length(plane, curve),
               curve_length(plane, centered), 1e-9));
  assert(close(curve.area(), centered.area(), 1e-9));
}

void test_support_samples_match_builtin_ellipse() {
  std::printf("  from_support_samples reproduces the ellipse builtin\n");

  double a = 1.0, b = 0.5;
  std::vector<double> angles, values;
  for (int i = 0; i < 512; ++i) {
    double th = 2.0 * kPi * i / 512.0;
    angles.push_back(th);
    values.push_back(std::sqrt(a * a * std::cos(th) * std::cos(th) +
                               b * b * std::sin(th) * std::sin(th)));
  }
  ConvexCurve sampled = ConvexCurve::from_support_samples(angles, values);
  ConvexCurve builtin = ConvexCurve::ellipse(a, b);
  for (int i = 0; i < 180; ++i) {
    Vec2 d = dir_of(2.0 * kPi * i / 180.0 + 0.005);
    assert(close(sampled.support(d), builtin.support(d), 1e-6));
  }
  assert(sampled.smooth());
}

void test_nonconvex_support_rejected() {
  std::printf("  non-convex support samples are rejected\n");

  std::vector<double> angles, values;
  for (int i = 0; i < 256; ++i) {
    double th = 2.0 * kPi * i / 256.0;
    angles.push_back(th);
    values.push_back(1.0 + 0.5 * std::cos(3.0 * th));  // h + h'' dips below 0
  }
  bool threw = false;
  try {
    ConvexCurve::from_support_samples(angles, values);
  } catch (const std::domain_error&) {
    threw = true;
  }
  assert(threw);
}

void test_reuleaux_builtin_shape() {
  std::printf("  Reuleaux triangle builtin: corners exact, width 1\n");

  ConvexCurve r = ConvexCurve::reuleaux_triangle(1.0);
  // Each corner sees the opposite arc at distance exactly 1.
  auto pts = r.sample_boundary(0);
  double maxd = 0.0;
  for (std::size_t i = 0; i < pts.size(); i += 7)
    for (std::size_t j = 0; j < pts.size(); j += 7)
      maxd = std::max(maxd, (pts[i] - pts[j]).len());
  assert(close(maxd, 1.0, 1e-6));
}

// ════════════════════════════════════════════════════════════════════
//  Length
// ════════════════════════════════════════════════════════════════════

void test_polyline_lengths_exact() {
  std::printf("  polyline lengths: exact metric edge sums\n");

  // 3-4-5 right triangle.
  ConvexCurve tri = ConvexCurve::from_polyline({{0, 0}, {3, 0}, {0, 4}});
  assert(close(curve_length(make_lp_plane(2.0), tri), 12.0, 1e-12));
  assert(close(curve_length(make_lp_plane(1.0), tri), 14.0, 1e-12));
  assert(close(curve_length(square_plane(), tri), 11.0, 1e-12));

  ConvexCurve sq =
      ConvexCurve::from_polyline({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
  assert(close(curve_length(make_lp_plane(2.0), sq), 8.0, 1e-12));
}

void test_ellipse_length_quadrature() {
  std::printf("  Euclidean ellipse length == adaptive Simpson oracle\n");

  double want = oracle::ellipse_perimeter(1.0, 0.5);
  assert(close(want, 4.844224110273838, 1e-12));  // frozen from the oracle
  double got = curve_length(make_lp_plane(2.0), ConvexCurve::ellipse(1.0, 0.5));
  assert(close(got, want, 1e-5));
}

void test_length_monotone_under_refinement() {
  std::printf("  chord-sum length grows monotonically with n\n");

  NormedPlane plane = make_lp_plane(4.0);
  ConvexCurve e = ConvexCurve::ellipse(1.0, 0.6);
  double l1 = curve_length(plane, e, 1024);
  double l2 = curve_length(plane, e, 2048);
  double l3 = curve_length(plane, e, 4096);
  assert(l1 <= l2 + 1e-12 && l2 <= l3 + 1e-12);
  assert(close(l1, l3, 1e-4 * l3));
}

void test_antinorm_length_square_circle() {
  std::printf("  square unit circle: anti-norm length 8\n");

  NormedPlane plane = square_plane();
  ConvexCurve s = ConvexCurve::unit_circle(plane);
  // Each side, e.g. (1,1) -> (-1,1), has anti-norm (l1) length 2.
  assert(close(curve_length_antinorm(plane, s), 8.0, 1e-9));
  assert(close(curve_length(plane, s), 8.0, 1e-9));
}

// ════════════════════════════════════════════════════════════════════
//  Diameter
// ════════════════════════════════════════════════════════════════════

void test_diameter_matches_allpairs() {
  std::printf("  diameter == all-pairs scan (several norms)\n");

  std::vector<Vec2> pent;
  for (int i = 0; i < 5; ++i)
    pent.push_back(dir_of(2.0 * kPi * i / 5.0 + 0.4) * (1.0 + 0.1 * i));
  ConvexCurve curve = ConvexCurve::from_polyline(pent);
  for (NormedPlane plane :
       {make_lp_plane(2.0), make_lp_plane(1.0), make_lp_plane(4.0),
        square_plane()}) {
    auto metric = [&plane](Vec2 v) { return norm_eval(plane, v); };
    DiameterResult got = diameter(plane, curve);
    double want = oracle::allpairs_diameter(curve.sample_boundary(0), metric);
    assert(got.value == want);  // same winning pair, same arithmetic
    assert(close(norm_eval(plane, got.a - got.b), got.value, 1e-12));
  }
}

void test_diameter_square_in_own_norm() {
  std::printf("  square unit circle: own-norm diameter 2\n");

  NormedPlane plane = square_plane();
  ConvexCurve s = ConvexCurve::unit_circle(plane);
  assert(close(diameter(plane, s).value, 2.0, 1e-12));
  // Anti-norm (l1) diameter of the square is 4: corner to corner.
  assert(close(diameter_antinorm(plane, s).value, 4.0, 1e-12));
}

void test_diameter_smooth_curve() {
  std::printf("  ellipse diameter: 2a in Euclid\n");

  DiameterResult d =
      diameter(make_lp_plane(2.0), ConvexCurve::ellipse(1.0, 0.5));
  assert(close(d.value, 2.0, 1e-5));
  assert(close(std::fabs(d.a.x - d.b.x), 2.0, 1e-4));
}

// ════════════════════════════════════════════════════════════════════
//  Minkowski support and width
// ════════════════════════════════════════════════════════════════════

void test_minkowski_support_square_euclid() {
  std::printf("  square in Euclid: support at u=0 is 1\n");

  NormedPlane plane = make_lp_plane(2.0);
  ConvexCurve sq =
      ConvexCurve::from_polyline({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
  PathPtr path = parametrize_unit_circle(plane);
  // u = 0 sits at phi = (1,0), phi' = (0,1): the support line is x = 1.
  assert(close(minkowski_support(plane, sq, *path, 0.0), 1.0, 1e-9));
}

void test_minkowski_support_is_line_distance() {
  std::printf("  minkowski_support == norm distance of the support line\n");

  NormedPlane plane = make_lp_plane(4.0);
  ConvexCurve e = ConvexCurve::ellipse(1.0, 0.6);
  PathPtr path = parametrize_unit_circle(plane);
  double L = path->total_length();
  for (int i = 0; i < 12; ++i) {
    double u = L * i / 12.0;
    Vec2 tan = path->tangent_at(u);
    Vec2 touch = e.support_point(tan.perp_cw());
    double want = line_distance_oracle(plane, touch, tan);
    double got = minkowski_support(plane, e, *path, u);
    assert(close(got, want, 1e-6 * want));
  }
}

void test_self_support_is_one() {
  std::printf("  unit circle supports itself at 1\n");

  for (NormedPlane plane : {make_lp_plane(2.0), make_lp_plane(4.0),
                            square_plane()}) {
    ConvexCurve s = ConvexCurve::unit_circle(plane);
    PathPtr path = parametrize_unit_circle(plane);
    double L = path->total_length();
    // 2e-5 headroom: the spline ingestion of the l4 circle carries an
    // interpolation cusp near the four flat points.
    for (int i = 0; i < 16; ++i) {
      double u = L * (i + 0.25) / 16.0;
      assert(close(minkowski_support(plane, s, *path, u), 1.0, 2e-5));
    }
  }
}

void test_decomposition_residual_small() {
  std::printf("  moving-basis reassembly residual is numerical noise\n");

  NormedPlane plane = make_lp_plane(4.0);
  ConvexCurve e = ConvexCurve::ellipse(1.0, 0.6);
  PathPtr path = parametrize_unit_circle(plane, 512);
  assert(support_decomposition_residual(plane, e, *path) < 1e-9);

  NormedPlane sq = square_plane();
  ConvexCurve tri = ConvexCurve::from_polyline({{1, 0}, {0, 1}, {-1, -1}});
  PathPtr path2 = parametrize_unit_circle(sq, 512);
  assert(support_decomposition_residual(sq, tri, *path2) < 1e-9);
}

void test_width_values() {
  std::printf("  width_in_direction closed cases\n");

  NormedPlane euclid = make_lp_plane(2.0);
  ConvexCurve sq =
      ConvexCurve::from_polyline({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
  assert(close(width_in_direction(euclid, sq, {1, 0}), 2.0, 1e-12));
  assert(close(width_in_direction(euclid, sq, {1, 1}),
               2.0 * std::sqrt(2.0), 1e-12));
  // In its own norm the ball has width 2 in every direction.
  NormedPlane plane = square_plane();
  ConvexCurve s = ConvexCurve::unit_circle(plane);
  for (int i = 0; i < 36; ++i)
    assert(close(width_in_direction(plane, s, dir_of(0.17 * i)), 2.0, 1e-9));

  bool threw = false;
  try {
    width_in_direction(euclid, sq, {0, 0});
  } catch (const std::domain_error&) {
    threw = true;
  }
  assert(threw);
}

void test_width_at_param_agrees() {
  std::printf("  width by support parameter matches width by direction\n");

  NormedPlane plane = make_lp_plane(2.0);
  ConvexCurve r = ConvexCurve::reuleaux_triangle(1.0);
  PathPtr path = parametrize_unit_circle(plane);
  double L = path->total_length();
  for (int i = 0; i < 24; ++i) {
    double u = L * i / 24.0;
    // The support line at u has outward normal tangent(u) turned clockwise.
    Vec2 v = path->tangent_at(u).perp_cw();
    assert(close(width_at_param(plane, r, *path, u),
                 width_in_direction(plane, r, v), 1e-6));
  }
}

void test_constant_width_detection() {
  std::printf("  is_constant_width verdicts\n");

  NormedPlane euclid = make_lp_plane(2.0);
  auto [cw1, w1] = is_constant_width(euclid, ConvexCurve::reuleaux_triangle(1.0));
  assert(cw1 && close(w1, 1.0, 1e-3));
  auto [cw2, w2] = is_constant_width(euclid, ConvexCurve::ellipse(1.0, 0.5));
  assert(!cw2);
  (void)w2;
  // Any unit ball is constant-width 2 in its own plane.
  for (NormedPlane plane : {square_plane(), make_lp_plane(4.0)}) {
    auto [cw, w] = is_constant_width(plane, ConvexCurve::unit_circle(plane));
    assert(cw && close(w, 2.0, 1e-6));
  }
  // ...but generally not in someone else's plane.
  auto [cw3, w3] =
      is_constant_width(square_plane(), ConvexCurve::ellipse(1.0, 0.5));
  assert(!cw3);
  (void)w3;
}

// ════════════════════════════════════════════════════════════════════
//  Circular curvature
// ════════════════════════════════════════════════════════════════════

void test_circle_curvature_euclid() {
  std::printf("  Euclidean circle of radius 2: k = 1/2 everywhere\n");

  NormedPlane plane = make_lp_plane(2.0);
  ConvexCurve circle = ConvexCurve::ellipse(2.0, 2.0);
  PathPtr path = parametrize_unit_circle(plane);
  CurvatureProfile prof = curvature_profile(plane, circle, *path);
  assert(close(prof.curve_length(), 4.0 * kPi, 1e-4));
  for (double s : {0.0, 1.0, 3.7, 9.9}) {
    assert(close(prof.curvature_at(s), 0.5, 1e-4));
    assert(close(prof.radius_at(s), 2.0, 1e-3));
  }
}

void test_ellipse_curvature_at_apex() {
  std::printf("  ellipse (1, 0.5) at (1,0): rho = 0.25\n");

  NormedPlane plane = make_lp_plane(2.0);
  ConvexCurve e = ConvexCurve::ellipse(1.0, 0.5);
  PathPtr path = parametrize_unit_circle(plane);
  // Arc length 0 on the profile corresponds to normal angle 0, which is the
  // boundary point (1, 0).
  auto [k, rho] = circular_curvature(plane, e, *path, 0.0);
  assert(close(rho, 0.25, 1e-3));
  assert(close(k, 4.0, 1e-2));
}

void test_self_curvature_is_one() {
  std::printf("  unit circle in its own smooth norm: k = rho = 1\n");

  NormedPlane plane = make_lp_plane(4.0);
  ConvexCurve s = ConvexCurve::unit_circle(plane);
  PathPtr path = parametrize_unit_circle(plane);
  CurvatureProfile prof = curvature_profile(plane, s, *path);
  for (double frac : {0.0, 0.21, 0.5, 0.83}) {
    double at = frac * prof.curve_length();
    assert(close(prof.curvature_at(at), 1.0, 1e-4));
    assert(close(prof.radius_at(at), 1.0, 1e-4));
  }
  // The support-parameter correspondence is the identity.
  assert(close(prof.circle_length(), prof.curve_length(), 1e-9));
}

void test_curvature_analytic_ratio() {
  std::printf("  rho == (h_K + h_K'') / (h_B + h_B'') at matched normals\n");

  NormedPlane plane = make_lp_plane(4.0);
  ConvexCurve e = ConvexCurve::ellipse(1.0, 0.6);
  PathPtr path = parametrize_unit_circle(plane);
  CurvatureProfile prof = curvature_profile(plane, e, *path);

  auto hK = [](double th) {
    double c = std::cos(th), s = std::sin(th);
    return std::sqrt(c * c + 0.36 * s * s);
  };
  auto hB = [&plane](double th) {
    return plane.ball->support(dir_of(th));
  };
  const double d = 1e-4;
  for (double psi : {0.3, 1.1, 2.0, 2.9, 4.2, 5.5}) {
    double numer = hK(psi) + (hK(psi + d) - 2.0 * hK(psi) + hK(psi - d)) / (d * d);
    double denom = hB(psi) + (hB(psi + d) - 2.0 * hB(psi) + hB(psi - d)) / (d * d);
    double want = numer / denom;
    double got = prof.radius_at(prof.param_of_normal(psi));
    assert(close(got, want, 2e-3 * want));
  }
}

void test_curvature_rejects_polygons() {
  std::printf("  curvature rejects polygonal curves and polygonal norms\n");

  NormedPlane euclid = make_lp_plane(2.0);
  ConvexCurve sq =
      ConvexCurve::from_polyline({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
  PathPtr path = parametrize_unit_circle(euclid);
  bool threw = false;
  try {
    curvature_profile(euclid, sq, *path);
  } catch (const std::domain_error& e) {
    threw = true;
    assert(std::string(e.what()).find("smooth_approximate") !=
           std::string::npos);
  }
  assert(threw);

  NormedPlane sqp = square_plane();
  PathPtr path2 = parametrize_unit_circle(sqp);
  threw = false;
  try {
    curvature_profile(sqp, ConvexCurve::ellipse(1.0, 0.5), *path2);
  } catch (const std::domain_error&) {
    threw = true;
  }
  assert(threw);
}

}  // namespace

int main() {
  std::printf("=== Convex curve tests ===\n\n");

  std::printf("Ingestion:\n");
  test_polyline_ingestion_and_support();
  test_offset_ingestion_translates();
  test_support_samples_match_builtin_ellipse();
  test_nonconvex_support_rejected();
  test_reuleaux_builtin_shape();

  std::printf("\nLength:\n");
  test_polyline_lengths_exact();
  test_ellipse_length_quadrature();
  test_length_monotone_under_refinement();
  test_antinorm_length_square_circle();

  std::printf("\nDiameter:\n");
  test_diameter_matches_allpairs();
  test_diameter_square_in_own_norm();
  test_diameter_smooth_curve();

  std::printf("\nSupport and width:\n");
  test_minkowski_support_square_euclid();
  test_minkowski_support_is_line_distance();
  test_self_support_is_one();
  test_decomposition_residual_small();
  test_width_values();
  test_width_at_param_agrees();
  test_constant_width_detection();

  std::printf("\nCurvature:\n");
  test_circle_curvature_euclid();
  test_ellipse_curvature_at_apex();
  test_self_curvature_is_one();
  test_curvature_analytic_ratio();
  test_curvature_rejects_polygons();

  std::printf("\nAll convex curve tests passed.\n");
  return 0;
}
