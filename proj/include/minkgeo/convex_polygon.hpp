#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "minkgeo/vec2.hpp"

namespace minkgeo {

/// Closed convex polygon with the origin strictly inside, stored
/// counterclockwise with collinear and duplicate vertices removed.
/// Precomputes the vertex fan (for gauge queries) and the edge-normal fan
/// (for support queries), both as unwrapped increasing angle tables.
class ConvexPolygon {
 public:
  /// Builds from an arbitrary closed vertex loop.  Orientation is fixed up,
  /// consecutive duplicates and collinear runs are dropped.  Throws
  /// std::invalid_argument if the cleaned loop is not strictly convex or the
  /// origin is not strictly interior.
  explicit ConvexPolygon(std::vector<Vec2> vertices);

  const std::vector<Vec2>& vertices() const { return v_; }
  std::size_t size() const { return v_.size(); }

  double area() const { return area_; }
  Vec2 centroid() const { return centroid_; }

  /// Minkowski functional of the polygon: the factor by which w must be
  /// scaled to land on the boundary.  Exact cone arithmetic; gauge(0) = 0.
  double gauge(Vec2 w) const;

  /// Euclidean support function h(u) = max_i <v_i, u>, evaluated by locating
  /// u in the edge-normal fan.  Exact; homogeneous of degree 1 in u.
  double support(Vec2 u) const;

  /// Index of a vertex attaining the support maximum in direction u.  When u
  /// is parallel to an edge normal both end vertices attain it; the one with
  /// the larger fan angle is returned.
  std::size_t support_vertex(Vec2 u) const;

  /// Boundary point hit by the ray from the origin through direction d.
  Vec2 ray_point(Vec2 d) const { return d / gauge(d); }

  /// Edge index i such that the open angular cone (ang_i, ang_{i+1}) of the
  /// vertex fan contains direction d; boundary points on that edge.
  std::size_t edge_for_ray(Vec2 d) const;

  /// Direction of the edge leaving vertex i (towards vertex i+1).
  Vec2 edge_dir(std::size_t i) const {
    return v_[(i + 1) % v_.size()] - v_[i];
  }

  /// Outward unit normal of edge i.
  Vec2 edge_normal(std::size_t i) const { return n_[i]; }
  /// Support value of edge i: <x, n_i> = d_i on the edge.
  double edge_offset(std::size_t i) const { return d_[i]; }

  /// Polar dual polygon: vertex j = n_j / d_j for each edge j.  Requires the
  /// origin strictly inside (guaranteed by construction).
  ConvexPolygon polar() const;

  /// True when for every vertex v the point -v is also a vertex (within
  /// rel_tol relative to the coordinate scale).
  bool is_origin_symmetric(double rel_tol = 1e-9) const;

  /// All vertex index pairs (i, j) admitting parallel supporting lines
  /// (antipodal pairs).  The norm-diameter of the vertex set is attained on
  /// one of these pairs, for any norm.
  std::vector<std::pair<std::size_t, std::size_t>> antipodal_pairs() const;

  /// Unwrapped increasing vertex angles; vang()[0] in (-pi, pi].
  const std::vector<double>& vertex_angles() const { return vang_; }
  /// Unwrapped increasing edge-normal angles.
  const std::vector<double>& normal_angles() const { return nang_; }

 private:
  std::vector<Vec2> v_;
  std::vector<double> vang_;  // vertex angles, unwrapped increasing
  std::vector<Vec2> n_;       // outward unit edge normals
  std::vector<double> d_;     // edge support offsets, all > 0
  std::vector<double> nang_;  // normal angles, unwrapped increasing
  double area_ = 0.0;
  Vec2 centroid_;

  // Index of the fan cone containing angle `ang` for an unwrapped table.
  static std::size_t fan_locate(const std::vector<double>& table, double ang);
};

/// Removes duplicates and collinear runs from a closed loop and returns it
/// counterclockwise.  Throws if fewer than 3 vertices survive or the loop is
/// not convex.  Shared by polygon construction and polyline curve ingestion.
std::vector<Vec2> canonicalize_convex_loop(std::vector<Vec2> pts);

}  // namespace minkgeo
