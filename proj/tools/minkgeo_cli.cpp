// Command-line front end: norm and anti-norm evaluation, Birkhoff tests,
// Radon checks, unit-circle parametrization, curve measurements, synthesis,
// claim verification, and the open-problem sweep.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "minkgeo/curvature.hpp"
#include "minkgeo/curve_ops.hpp"
#include "minkgeo/io.hpp"
#include "minkgeo/synthesis.hpp"
#include "minkgeo/unit_ball.hpp"
#include "minkgeo/verify.hpp"

namespace {

using namespace minkgeo;

struct Options {
  std::string plane_file;
  std::string curve_file;
  std::size_t n = 4096;
  double tol = 1e-3;
  std::uint64_t seed = 20240909;
  std::string out_file;
  std::string svg_file;
  double x = 0.0, y = 0.0;
  double vx = 0.0, vy = 0.0;
  double u = 0.0;
  double s = 0.0;
  double epsilon = 1e-2;
  double width = 1.0;
  std::size_t count = 100;
  std::string build_spec;
};

NormedPlane need_plane(const Options& opt) {
  if (opt.plane_file.empty())
    throw CLI::ValidationError("--plane", "a plane spec file is required");
  return load_plane(opt.plane_file);
}

ConvexCurve need_curve(const Options& opt, const NormedPlane& plane) {
  if (opt.curve_file.empty())
    throw CLI::ValidationError("--curve", "a curve spec file is required");
  return load_curve(opt.curve_file, plane);
}

void write_out(const Options& opt, const std::string& text) {
  if (opt.out_file.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(opt.out_file);
  if (!out) throw std::runtime_error("cannot write " + opt.out_file);
  out << text;
}

void maybe_svg(const Options& opt, const NormedPlane& plane,
               const ConvexCurve& curve) {
  if (opt.svg_file.empty()) return;
  std::ofstream out(opt.svg_file);
  if (!out) throw std::runtime_error("cannot write " + opt.svg_file);
  out << figure_svg(plane, curve);
}

void emit_report(const Options& opt, const NormedPlane& plane,
                 const ConvexCurve& curve, const VerificationReport& report) {
  write_out(opt, report_to_json(report).dump(2) + "\n");
  maybe_svg(opt, plane, curve);
  if (!report.holds()) {
    std::cerr << report.claim << ": BOUND VIOLATED (slack " << report.slack
              << ")\n";
    std::exit(1);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normed-plane geometry toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* cmd) {
    cmd->add_option("--plane", opt.plane_file, "plane spec JSON file");
    cmd->add_option("--curve", opt.curve_file, "curve spec JSON file");
    cmd->add_option("--n", opt.n, "resolution");
    cmd->add_option("--tol", opt.tol, "tolerance");
    cmd->add_option("--seed", opt.seed, "RNG seed");
    cmd->add_option("--out", opt.out_file, "output file (.json or .csv)");
    cmd->add_option("--svg", opt.svg_file, "SVG figure output file");
  };

  // norm eval / antinorm eval
  auto* norm_cmd = app.add_subcommand("norm", "norm operations");
  auto* norm_eval_cmd = norm_cmd->add_subcommand("eval", "evaluate the norm");
  add_common(norm_eval_cmd);
  norm_eval_cmd->add_option("--x", opt.x, "vector x")->required();
  norm_eval_cmd->add_option("--y", opt.y, "vector y")->required();

  auto* anti_cmd = app.add_subcommand("antinorm", "anti-norm operations");
  auto* anti_eval_cmd = anti_cmd->add_subcommand("eval", "evaluate the anti-norm");
  add_common(anti_eval_cmd);
  anti_eval_cmd->add_option("--x", opt.x, "vector x")->required();
  anti_eval_cmd->add_option("--y", opt.y, "vector y")->required();

  auto* birkhoff_cmd =
      app.add_subcommand("birkhoff", "test Birkhoff orthogonality v -| w");
  add_common(birkhoff_cmd);
  birkhoff_cmd->add_option("--x", opt.x, "v.x")->required();
  birkhoff_cmd->add_option("--y", opt.y, "v.y")->required();
  birkhoff_cmd->add_option("--wx", opt.vx, "w.x")->required();
  birkhoff_cmd->add_option("--wy", opt.vy, "w.y")->required();

  auto* radon_cmd = app.add_subcommand("radon", "Radon plane checks");
  auto* radon_check = radon_cmd->add_subcommand("check", "is the plane Radon");
  add_common(radon_check);
  auto* radon_norm = radon_cmd->add_subcommand("normalize",
                                               "rescale omega to anti-norm = norm");
  add_common(radon_norm);

  auto* circle_cmd = app.add_subcommand("circle", "unit-circle parametrization");
  auto* circle_param = circle_cmd->add_subcommand("param", "export the path");
  add_common(circle_param);
  auto* circle_perim = circle_cmd->add_subcommand("perimeter", "l(S) and l_a(S)");
  add_common(circle_perim);

  auto* curve_cmd = app.add_subcommand("curve", "curve measurements");
  auto* curve_length_cmd = curve_cmd->add_subcommand("length", "norm and anti-norm length");
  add_common(curve_length_cmd);
  auto* curve_diam_cmd = curve_cmd->add_subcommand("diameter", "norm and anti-norm diameter");
  add_common(curve_diam_cmd);
  auto* curve_width_cmd = curve_cmd->add_subcommand("width", "width in a direction, plus the sweep");
  add_common(curve_width_cmd);
  curve_width_cmd->add_option("--vx", opt.vx, "direction x");
  curve_width_cmd->add_option("--vy", opt.vy, "direction y");
  auto* curve_support_cmd = curve_cmd->add_subcommand("support", "Minkowski support at u");
  add_common(curve_support_cmd);
  curve_support_cmd->add_option("--u", opt.u, "circle arc-length parameter");
  auto* curve_curv_cmd = curve_cmd->add_subcommand("curvature", "circular curvature at s");
  add_common(curve_curv_cmd);
  curve_curv_cmd->add_option("--s", opt.s, "curve arc-length parameter");

  auto* build_cmd = app.add_subcommand("build", "constructions");
  auto* build_cw = build_cmd->add_subcommand("cw", "constant-width curve from a synthesis spec");
  add_common(build_cw);
  build_cw->add_option("--spec", opt.build_spec, "synthesis spec JSON file")
      ->required();
  auto* build_radon = build_cmd->add_subcommand("radon", "Radon plane from a quarter arc");
  add_common(build_radon);
  build_radon->add_option("--spec", opt.build_spec,
                          "JSON file with {\"arc\": [[x,y],...]}")
      ->required();
  auto* build_smooth = build_cmd->add_subcommand("smooth", "smooth approximation");
  add_common(build_smooth);
  build_smooth->add_option("--epsilon", opt.epsilon, "Hausdorff budget");

  auto* verify_cmd = app.add_subcommand("verify", "claim verification");
  auto* verify_rs = verify_cmd->add_subcommand("rs", "length bound on Radon planes");
  auto* verify_anti = verify_cmd->add_subcommand("antinorm", "anti-norm length bound");
  auto* verify_dual = verify_cmd->add_subcommand("dual", "dual length bound");
  auto* verify_barbier_cmd = verify_cmd->add_subcommand("barbier", "constant-width length formula");
  auto* verify_curvsum = verify_cmd->add_subcommand("curvsum", "curvature-radius sum");
  auto* verify_defect = verify_cmd->add_subcommand("defect", "defect-integral bound");
  for (auto* cmd : {verify_rs, verify_anti, verify_dual, verify_barbier_cmd,
                    verify_curvsum, verify_defect})
    add_common(cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "experiments");
  auto* sweep_open = sweep_cmd->add_subcommand("open-problem",
                                               "ratio sweep on a non-Radon plane");
  add_common(sweep_open);
  sweep_open->add_option("--count", opt.count, "number of random curves");

  CLI11_PARSE(app, argc, argv);

  try {
    char line[256];
    if (norm_eval_cmd->parsed()) {
      NormedPlane plane = need_plane(opt);
      std::snprintf(line, sizeof(line), "%.12g",
                    norm_eval(plane, {opt.x, opt.y}));
      write_out(opt, line);
    } else if (anti_eval_cmd->parsed()) {
      NormedPlane plane = need_plane(opt);
      std::snprintf(line, sizeof(line), "%.12g",
                    antinorm_eval(plane, {opt.x, opt.y}));
      write_out(opt, line);
    } else if (birkhoff_cmd->parsed()) {
      NormedPlane plane = need_plane(opt);
      bool ortho = birkhoff_orthogonal(plane, {opt.x, opt.y}, {opt.vx, opt.vy},
                                       opt.tol);
      write_out(opt, ortho ? "orthogonal" : "not orthogonal");
      return ortho ? 0 : 1;
    } else if (radon_check->parsed()) {
      NormedPlane plane = need_plane(opt);
      auto [radon, witness] = is_radon(plane);
      nlohmann::json doc{{"plane", plane.fingerprint()}, {"radon", radon}};
      if (witness)
        doc["witness"] = {{"v", {witness->v.x, witness->v.y}},
                          {"w", {witness->w.x, witness->w.y}}};
      write_out(opt, doc.dump(2) + "\n");
      return radon ? 0 : 1;
    } else if (radon_norm->parsed()) {
      NormedPlane plane = need_plane(opt);
      NormedPlane fixed = radon_normalize(plane);
      nlohmann::json doc = plane_to_json(fixed);
      doc["plane"] = fixed.fingerprint();
      write_out(opt, doc.dump(2) + "\n");
    } else if (circle_param->parsed()) {
      NormedPlane plane = need_plane(opt);
      PathPtr path = parametrize_unit_circle(plane, opt.n);
      write_out(opt, path_to_csv(*path));
    } else if (circle_perim->parsed()) {
      NormedPlane plane = need_plane(opt);
      nlohmann::json doc{{"plane", plane.fingerprint()},
                         {"length", circle_perimeter(plane, opt.n)},
                         {"length_antinorm",
                          circle_perimeter_antinorm(plane, opt.n)},
                         {"kepler_deviation",
                          kepler_deviation(plane,
                                           *parametrize_unit_circle(plane, opt.n))}};
      write_out(opt, doc.dump(2) + "\n");
    } else if (curve_length_cmd->parsed()) {
      NormedPlane plane = need_plane(opt);
      ConvexCurve curve = need_curve(opt, plane);
      nlohmann::json doc{{"curve", curve.fingerprint()},
                         {"length", curve_length(plane, curve, opt.n)},
                         {"length_antinorm",
                          curve_length_antinorm(plane, curve, opt.n)}};
      write_out(opt, doc.dump(2) + "\n");
      maybe_svg(opt, plane, curve);
    } else if (curve_diam_cmd->parsed()) {
      NormedPlane plane = need_plane(opt);
      ConvexCurve curve = need_curve(opt, plane);
      DiameterResult d = diameter(plane, curve, opt.n);
      DiameterResult da = diameter_antinorm(plane, curve, opt.n);
      nlohmann::json doc{
          {"curve", curve.fingerprint()},
          {"diameter", d.value},
          {"pair", {{d.a.x, d.a.y}, {d.b.x, d.b.y}}},
          {"diameter_antinorm", da.value},
          {"pair_antinorm", {{da.a.x, da.a.y}, {da.b.x, da.b.y}}}};
      write_out(opt, doc.dump(2) + "\n");
    } else if (curve_width_cmd->parsed()) {
      NormedPlane plane = need_plane(opt);
      ConvexCurve curve = need_curve(opt, plane);
      auto [cw, mean] = is_constant_width(plane, curve, 360, opt.tol);
      nlohmann::json doc{{"curve", curve.fingerprint()},
                         {"constant_width", cw},
                         {"mean_width", mean}};
      if (opt.vx != 0.0 || opt.vy != 0.0)
        doc["width"] = width_in_direction(plane, curve, {opt.vx, opt.vy});
      write_out(opt, doc.dump(2) + "\n");
      maybe_svg(opt, plane, curve);
    } else if (curve_support_cmd->parsed()) {
      NormedPlane plane = need_plane(opt);
      ConvexCurve curve = need_curve(opt, plane);
      PathPtr path = parametrize_unit_circle(plane, opt.n);
      nlohmann::json doc{
          {"curve", curve.fingerprint()},
          {"u", opt.u},
          {"support", minkowski_support(plane, curve, *path, opt.u)},
          {"width_at_param", width_at_param(plane, curve, *path, opt.u)}};
      write_out(opt, doc.dump(2) + "\n");
    } else if (curve_curv_cmd->parsed()) {
      NormedPlane plane = need_plane(opt);
      ConvexCurve curve = need_curve(opt, plane);
      PathPtr path = parametrize_unit_circle(plane, opt.n);
      auto [k, rho] = circular_curvature(plane, curve, *path, opt.s);
      nlohmann::json doc{{"curve", curve.fingerprint()},
                         {"s", opt.s},
                         {"curvature", k},
                         {"radius", rho}};
      write_out(opt, doc.dump(2) + "\n");
    } else if (build_cw->parsed()) {
      NormedPlane plane = need_plane(opt);
      std::ifstream in(opt.build_spec);
      if (!in) throw std::runtime_error("cannot open " + opt.build_spec);
      nlohmann::json doc;
      in >> doc;
      ConvexCurve curve =
          build_constant_width_curve(plane, synthesis_from_json(doc));
      auto [cw, mean] = is_constant_width(plane, curve);
      nlohmann::json result = curve_to_json(curve);
      result["curve"] = curve.fingerprint();
      result["constant_width"] = cw;
      result["mean_width"] = mean;
      write_out(opt, result.dump(2) + "\n");
      maybe_svg(opt, plane, curve);
    } else if (build_radon->parsed()) {
      std::ifstream in(opt.build_spec);
      if (!in) throw std::runtime_error("cannot open " + opt.build_spec);
      nlohmann::json doc;
      in >> doc;
      std::vector<Vec2> arc;
      for (const auto& p : doc.at("arc"))
        arc.push_back({p[0].get<double>(), p[1].get<double>()});
      NormedPlane plane = build_radon_plane(arc);
      PathPtr path = parametrize_unit_circle(plane, opt.n);
      nlohmann::json result = plane_to_json(plane);
      result["plane"] = plane.fingerprint();
      result["length"] = path->total_length();
      result["kepler_deviation"] = kepler_deviation(plane, *path);
      write_out(opt, result.dump(2) + "\n");
    } else if (build_smooth->parsed()) {
      NormedPlane plane = need_plane(opt);
      if (!opt.curve_file.empty()) {
        ConvexCurve smoothed =
            smooth_approximate(load_curve(opt.curve_file, plane), opt.epsilon);
        nlohmann::json doc = curve_to_json(smoothed);
        doc["curve"] = smoothed.fingerprint();
        doc["epsilon"] = opt.epsilon;
        write_out(opt, doc.dump(2) + "\n");
        maybe_svg(opt, plane, smoothed);
      } else {
        NormedPlane smoothed =
            make_plane(smooth_approximate(plane.ball, opt.epsilon),
                       plane.omega_scale);
        nlohmann::json doc = plane_to_json(smoothed);
        doc["plane"] = smoothed.fingerprint();
        doc["epsilon"] = opt.epsilon;
        write_out(opt, doc.dump(2) + "\n");
      }
    } else if (verify_rs->parsed()) {
      NormedPlane plane = need_plane(opt);
      ConvexCurve curve = need_curve(opt, plane);
      emit_report(opt, plane, curve,
                  verify_rosenthal_szasz(plane, curve, opt.n, opt.tol));
    } else if (verify_anti->parsed()) {
      NormedPlane plane = need_plane(opt);
      ConvexCurve curve = need_curve(opt, plane);
      emit_report(opt, plane, curve,
                  verify_antinorm_bound(plane, curve, opt.n, opt.tol));
    } else if (verify_dual->parsed()) {
      NormedPlane plane = need_plane(opt);
      ConvexCurve curve = need_curve(opt, plane);
      emit_report(opt, plane, curve,
                  verify_dual_bound(plane, curve, opt.n, opt.tol));
    } else if (verify_barbier_cmd->parsed()) {
      NormedPlane plane = need_plane(opt);
      ConvexCurve curve = need_curve(opt, plane);
      emit_report(opt, plane, curve,
                  verify_barbier(plane, curve, opt.n, opt.tol));
    } else if (verify_curvsum->parsed()) {
      NormedPlane plane = need_plane(opt);
      ConvexCurve curve = need_curve(opt, plane);
      emit_report(opt, plane, curve,
                  verify_curvature_sum(plane, curve, opt.n));
    } else if (verify_defect->parsed()) {
      NormedPlane plane = need_plane(opt);
      ConvexCurve curve = need_curve(opt, plane);
      emit_report(opt, plane, curve,
                  verify_defect_integral(plane, curve, opt.n, opt.tol));
    } else if (sweep_open->parsed()) {
      NormedPlane plane = need_plane(opt);
      OpenProblemSweep sweep =
          explore_open_problem(plane, opt.count, opt.seed, opt.n, opt.tol);
      write_out(opt, sweep_to_json(sweep).dump(2) + "\n");
      if (sweep.counterexample_candidate)
        std::cerr << "COUNTEREXAMPLE-CANDIDATE: ratio " << sweep.recheck_ratio
                  << " at 4x resolution; review manually\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
