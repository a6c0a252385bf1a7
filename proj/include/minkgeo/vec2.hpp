#pragma once

#include <cmath>

namespace minkgeo {

/// Plain 2D vector with the handful of operations the library needs.
/// Everything is constexpr-friendly and passed by value.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }

  constexpr double dot(Vec2 o) const { return x * o.x + y * o.y; }

  /// z-component of the cross product; positive when o is counterclockwise
  /// from *this.
  constexpr double cross(Vec2 o) const { return x * o.y - y * o.x; }

  double len() const { return std::hypot(x, y); }
  constexpr double len2() const { return x * x + y * y; }

  /// Counterclockwise quarter turn.
  constexpr Vec2 perp() const { return {-y, x}; }
  /// Clockwise quarter turn.
  constexpr Vec2 perp_cw() const { return {y, -x}; }

  double angle() const { return std::atan2(y, x); }

  Vec2 normalized() const {
    double l = len();
    return {x / l, y / l};
  }
};

constexpr Vec2 operator*(double s, Vec2 v) { return {v.x * s, v.y * s}; }

inline double dot(Vec2 a, Vec2 b) { return a.dot(b); }
inline double cross(Vec2 a, Vec2 b) { return a.cross(b); }
inline double dist(Vec2 a, Vec2 b) { return (a - b).len(); }

inline Vec2 dir_of(double angle) { return {std::cos(angle), std::sin(angle)}; }

}  // namespace minkgeo
