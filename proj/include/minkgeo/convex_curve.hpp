#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "minkgeo/convex_polygon.hpp"
#include "minkgeo/periodic_spline.hpp"
#include "minkgeo/plane.hpp"

namespace minkgeo {

/// Closed convex curve, the subject of the length and width operations.
/// Two representations: an exact polygon (polyline input) or a smooth body
/// given by its Euclidean support function (periodic cubic spline).
///
/// On ingestion the curve is translated, if needed, so the origin lies
/// strictly inside; the applied offset is recorded (original = stored +
/// ingestion_offset).  Translation changes none of the reported quantities.
class ConvexCurve {
 public:
  enum class Kind { polyline, support_fn };

  /// Closed vertex loop, either orientation; must be convex.
  static ConvexCurve from_polyline(std::vector<Vec2> points);

  /// Support samples at strictly increasing angles in [0, 2*pi).  Must
  /// describe a strictly convex body: h + h'' > 0.
  static ConvexCurve from_support_samples(const std::vector<double>& angles,
                                          const std::vector<double>& values);

  /// Support function sampled on a uniform grid.
  static ConvexCurve from_support_function(
      const std::function<double(double)>& h, std::size_t grid = 4096,
      std::string tag = {});

  /// The plane's own unit circle: exact vertices for polygonal norms, a
  /// support-function copy for smooth ones.  The default knot count keeps
  /// the copy faithful even where the ball's curvature blows up (lp axes).
  static ConvexCurve unit_circle(const NormedPlane& plane,
                                 std::size_t n = 16384);

  /// Classical Reuleaux triangle of the given width, centred at the origin
  /// (constant width in the Euclidean plane), sampled as a polyline whose
  /// corner points are exact.
  static ConvexCurve reuleaux_triangle(double width, std::size_t n = 3 * 1024);

  /// Axis-aligned ellipse with semi-axes a >= b > 0.
  static ConvexCurve ellipse(double a, double b, std::size_t grid = 4096);

  Kind kind() const { return kind_; }
  bool smooth() const { return kind_ == Kind::support_fn; }
  Vec2 ingestion_offset() const { return offset_; }

  /// Euclidean support function of the stored body.
  double support(Vec2 u) const;

  /// Boundary point whose outward normal is parallel to u.  On a flat edge
  /// any point of the edge realizes the same support line; a vertex is
  /// returned.
  Vec2 support_point(Vec2 u) const;

  /// Closed counterclockwise boundary polyline: the exact vertex loop for
  /// polylines (n is ignored), n support-grid samples for smooth curves.
  std::vector<Vec2> sample_boundary(std::size_t n) const;

  double area() const;

  const ConvexPolygon& polygon() const;
  const PeriodicSpline& support_spline() const;

  const std::string& describe() const { return desc_; }
  std::string fingerprint() const;

 private:
  ConvexCurve() = default;

  Kind kind_ = Kind::polyline;
  std::shared_ptr<const ConvexPolygon> poly_;
  std::shared_ptr<const PeriodicSpline> h_;
  Vec2 offset_{0.0, 0.0};
  std::string desc_;

  static ConvexCurve from_spline_samples(std::vector<double> knots,
                                         std::vector<double> values,
                                         std::string tag);
};

}  // namespace minkgeo
