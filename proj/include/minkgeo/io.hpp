#pragma once

#include <string>

#include <json.hpp>

#include "minkgeo/circle_path.hpp"
#include "minkgeo/convex_curve.hpp"
#include "minkgeo/plane.hpp"
#include "minkgeo/synthesis.hpp"
#include "minkgeo/verify.hpp"

namespace minkgeo {

/// Plane spec:
///   {"ball": {"type": "lp", "p": 4, "scale": 1}
///          | {"type": "polygon", "vertices": [[x, y], ...]}
///          | {"type": "support_samples", "angles": [...], "values": [...]}
///          | {"type": "radon_glue", "arc": [[x, y], ...]},
///    "omega_scale": c}
/// Polygon vertices are counterclockwise, either the full symmetric loop or
/// one half (mirrored).  omega_scale defaults to 1.
NormedPlane plane_from_json(const nlohmann::json& doc);
NormedPlane load_plane(const std::string& path);

/// Curve spec:
///   {"type": "polyline", "points": [[x, y], ...]}
/// | {"type": "support_fn", "angles": [...], "values": [...]}
/// | {"type": "builtin", "name": "unit_circle"}          (needs the plane)
/// | {"type": "builtin", "name": "reuleaux", "width": d}
/// | {"type": "builtin", "name": "ellipse", "a": 1, "b": 0.5}
/// | {"type": "constant_width", "width": d, "harmonics": [[k, a], ...],
///    "n": 4096}                                          (synthesized)
ConvexCurve curve_from_json(const nlohmann::json& doc,
                            const NormedPlane& plane);
ConvexCurve load_curve(const std::string& path, const NormedPlane& plane);

WidthSynthesisSpec synthesis_from_json(const nlohmann::json& doc);

/// Loadable spec documents for built artifacts (inverse of the loaders for
/// the representations a build can produce).  Extra report fields may be
/// merged into these documents; the loaders ignore unknown keys.
nlohmann::json plane_to_json(const NormedPlane& plane);
nlohmann::json curve_to_json(const ConvexCurve& curve);

nlohmann::json report_to_json(const VerificationReport& report);
nlohmann::json sweep_to_json(const OpenProblemSweep& sweep);

/// CSV export of a path: one comment header with total_length and the plane
/// fingerprint, then rows u,x,y,dx,dy.
std::string path_to_csv(const ArcLengthPath& path);

/// Static figure: unit circle, anti-norm circle, subject curve, and the
/// curve's support lines at four parameters spaced L/4 apart.
std::string figure_svg(const NormedPlane& plane, const ConvexCurve& curve,
                       std::size_t n = 512);

}  // namespace minkgeo
