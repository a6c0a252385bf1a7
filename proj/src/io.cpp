#include "minkgeo/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "minkgeo/curve_ops.hpp"
#include "minkgeo/unit_ball.hpp"

namespace minkgeo {

namespace {

using nlohmann::json;

std::vector<Vec2> parse_points(const json& arr, const char* what) {
  if (!arr.is_array() || arr.empty())
    throw std::invalid_argument(std::string(what) + " must be a point array");
  std::vector<Vec2> pts;
  pts.reserve(arr.size());
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2)
      throw std::invalid_argument(std::string(what) +
                                  " entries must be [x, y] pairs");
    pts.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return pts;
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json doc;
  in >> doc;
  return doc;
}

}  // namespace

NormedPlane plane_from_json(const json& doc) {
  if (!doc.contains("ball"))
    throw std::invalid_argument("plane spec needs a \"ball\" object");
  const json& b = doc["ball"];
  std::string type = b.value("type", "");
  BallPtr ball;
  if (type == "lp") {
    ball = make_lp_ball(b.value("p", 2.0), b.value("scale", 1.0));
  } else if (type == "polygon") {
    ball = make_polygon_ball(parse_points(b.at("vertices"), "vertices"));
  } else if (type == "support_samples") {
    ball = make_support_ball(b.at("angles").get<std::vector<double>>(),
                             b.at("values").get<std::vector<double>>());
  } else if (type == "radon_glue") {
    ball = make_radon_glue_ball(parse_points(b.at("arc"), "arc"));
  } else {
    throw std::invalid_argument("unknown ball type \"" + type + "\"");
  }
  return make_plane(ball, doc.value("omega_scale", 1.0));
}

NormedPlane load_plane(const std::string& path) {
  return plane_from_json(read_file(path));
}

ConvexCurve curve_from_json(const json& doc, const NormedPlane& plane) {
  std::string type = doc.value("type", "");
  if (type == "polyline")
    return ConvexCurve::from_polyline(parse_points(doc.at("points"), "points"));
  if (type == "support_fn")
    return ConvexCurve::from_support_samples(
        doc.at("angles").get<std::vector<double>>(),
        doc.at("values").get<std::vector<double>>());
  if (type == "builtin") {
    std::string name = doc.value("name", "");
    // Parameters may sit at the top level or under a "params" object.
    const json& p = doc.contains("params") ? doc["params"] : doc;
    if (name == "unit_circle") return ConvexCurve::unit_circle(plane);
    if (name == "reuleaux" || name == "reuleaux_triangle")
      return ConvexCurve::reuleaux_triangle(p.value("width", 1.0));
    if (name == "ellipse")
      return ConvexCurve::ellipse(p.value("a", 1.0), p.value("b", 0.5));
    throw std::invalid_argument("unknown builtin curve \"" + name + "\"");
  }
  if (type == "constant_width")
    return build_constant_width_curve(plane, synthesis_from_json(doc));
  throw std::invalid_argument("unknown curve type \"" + type + "\"");
}

ConvexCurve load_curve(const std::string& path, const NormedPlane& plane) {
  return curve_from_json(read_file(path), plane);
}

WidthSynthesisSpec synthesis_from_json(const json& doc) {
  WidthSynthesisSpec spec;
  spec.width = doc.value("width", 1.0);
  spec.n = doc.value("n", static_cast<std::size_t>(4096));
  if (doc.contains("harmonics")) {
    for (const auto& h : doc["harmonics"]) {
      if (!h.is_array() || h.size() != 2)
        throw std::invalid_argument("harmonics entries must be [k, a] pairs");
      spec.harmonics.emplace_back(h[0].get<int>(), h[1].get<double>());
    }
  }
  if (doc.contains("sin_harmonics")) {
    for (const auto& h : doc["sin_harmonics"]) {
      if (!h.is_array() || h.size() != 2)
        throw std::invalid_argument("sin_harmonics entries must be [k, b] pairs");
      spec.sin_harmonics.emplace_back(h[0].get<int>(), h[1].get<double>());
    }
  }
  return spec;
}

json plane_to_json(const NormedPlane& plane) {
  json ball;
  if (auto lp = std::dynamic_pointer_cast<const LpBall>(plane.ball)) {
    ball = {{"type", "lp"}, {"p", lp->p()}};
  } else if (auto pg =
                 std::dynamic_pointer_cast<const PolygonBall>(plane.ball)) {
    json verts = json::array();
    for (const Vec2& v : pg->geometry().vertices())
      verts.push_back({v.x, v.y});
    ball = {{"type", "polygon"}, {"vertices", verts}};
  } else if (auto sm =
                 std::dynamic_pointer_cast<const SmoothBall>(plane.ball)) {
    const PeriodicSpline& h = sm->support_spline();
    ball = {{"type", "support_samples"},
            {"angles", h.knots()},
            {"values", h.values()}};
  } else {
    throw std::invalid_argument("plane_to_json: unsupported ball kind");
  }
  return {{"ball", ball}, {"omega_scale", plane.omega_scale}};
}

json curve_to_json(const ConvexCurve& curve) {
  if (curve.kind() == ConvexCurve::Kind::polyline) {
    json pts = json::array();
    for (const Vec2& v : curve.polygon().vertices()) pts.push_back({v.x, v.y});
    return {{"type", "polyline"}, {"points", pts}};
  }
  const PeriodicSpline& h = curve.support_spline();
  return {{"type", "support_fn"}, {"angles", h.knots()}, {"values", h.values()}};
}

json report_to_json(const VerificationReport& report) {
  return json{{"claim", report.claim},  {"plane", report.plane},
              {"curve", report.curve},  {"lhs", report.lhs},
              {"bound", report.bound},  {"slack", report.slack},
              {"equality", report.equality}, {"n", report.n},
              {"tol", report.tol},      {"seed", report.seed}};
}

json sweep_to_json(const OpenProblemSweep& sweep) {
  json curves = json::array();
  for (const auto& c : sweep.curves) {
    json harm = json::array();
    for (const auto& h : c.harmonics) harm.push_back({h[0], h[1], h[2]});
    curves.push_back({{"harmonics", harm},
                      {"ratio", c.ratio},
                      {"curve", c.fingerprint}});
  }
  json doc{{"plane", sweep.plane},
           {"seed", sweep.seed},
           {"n", sweep.n},
           {"tol", sweep.tol},
           {"circle_ratio", sweep.circle_ratio},
           {"curves", curves},
           {"best_index", sweep.best_index},
           {"best_ratio", sweep.best_ratio},
           {"counterexample_candidate", sweep.counterexample_candidate}};
  if (sweep.recheck_ratio != 0.0) doc["recheck_ratio"] = sweep.recheck_ratio;
  return doc;
}

std::string path_to_csv(const ArcLengthPath& path) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof(line), "# total_length=%.17g,plane=%s\n",
                path.total_length(), path.ball_fingerprint().c_str());
  out << line << "u,x,y,dx,dy\n";
  for (std::size_t i = 0; i < path.params().size(); ++i) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g,%.17g\n",
                  path.params()[i], path.points()[i].x, path.points()[i].y,
                  path.tangents()[i].x, path.tangents()[i].y);
    out << line;
  }
  return out.str();
}

std::string figure_svg(const NormedPlane& plane, const ConvexCurve& curve,
                       std::size_t n) {
  PathPtr path = parametrize_unit_circle(plane, n);
  NormedPlane anti = antinorm_unit_ball(plane);
  PathPtr anti_path = parametrize_unit_circle(anti, n);

  std::vector<Vec2> body = curve.sample_boundary(n);

  double radius = 1.0;
  for (const Vec2& p : body) radius = std::max(radius, p.len());
  for (const Vec2& p : anti_path->points()) radius = std::max(radius, p.len());
  double view = 1.15 * radius;

  std::ostringstream out;
  auto emit_poly = [&out, view](const std::vector<Vec2>& pts,
                                const char* color, const char* dash) {
    out << "  <polygon points=\"";
    char word[64];
    for (const Vec2& p : pts) {
      std::snprintf(word, sizeof(word), "%.5f,%.5f ", p.x, -p.y);
      out << word;
    }
    out << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
        << view / 220.0 << "\"";
    if (dash[0] != '\0') out << " stroke-dasharray=\"" << dash << "\"";
    out << "/>\n";
  };

  char head[256];
  std::snprintf(head, sizeof(head),
                "<svg xmlns=\"http://www.w3.org/2000/svg\" "
                "viewBox=\"%.4f %.4f %.4f %.4f\" width=\"640\" "
                "height=\"640\">\n",
                -view, -view, 2.0 * view, 2.0 * view);
  out << head;
  out << "  <rect x=\"" << -view << "\" y=\"" << -view << "\" width=\""
      << 2.0 * view << "\" height=\"" << 2.0 * view << "\" fill=\"white\"/>\n";

  emit_poly(path->points(), "#4455cc", "");
  emit_poly(anti_path->points(), "#44aa66", "0.06,0.04");
  emit_poly(body, "#cc3344", "");

  // Support lines of the curve at four parameters, drawn as chords across
  // the viewport: the line through the contact point with the circle's
  // tangent direction.
  double L = path->total_length();
  char seg[192];
  for (int k = 0; k < 4; ++k) {
    double u = L * static_cast<double>(k) / 4.0;
    Vec2 t = path->tangent_at(u).normalized();
    Vec2 g = curve.support_point(t.perp_cw());
    Vec2 a = g + t * (2.5 * view), b = g - t * (2.5 * view);
    std::snprintf(seg, sizeof(seg),
                  "  <line x1=\"%.5f\" y1=\"%.5f\" x2=\"%.5f\" y2=\"%.5f\" "
                  "stroke=\"#888888\" stroke-width=\"%.5f\"/>\n",
                  a.x, -a.y, b.x, -b.y, view / 300.0);
    out << seg;
    std::snprintf(seg, sizeof(seg),
                  "  <circle cx=\"%.5f\" cy=\"%.5f\" r=\"%.5f\" "
                  "fill=\"#cc3344\"/>\n",
                  g.x, -g.y, view / 90.0);
    out << seg;
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace minkgeo
