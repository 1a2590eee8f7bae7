// Planar primitives shared by every module.
#pragma once

#include <cmath>
#include <numbers>
#include <optional>

namespace tsurf {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kDefaultTol = 1e-9;

/// A point (or vector) of the plane, in abstract length units.
struct PlanarPoint {
  double x = 0.0;
  double y = 0.0;

  constexpr PlanarPoint operator+(PlanarPoint o) const { return {x + o.x, y + o.y}; }
  constexpr PlanarPoint operator-(PlanarPoint o) const { return {x - o.x, y - o.y}; }
  constexpr PlanarPoint operator-() const { return {-x, -y}; }
  constexpr PlanarPoint operator*(double s) const { return {x * s, y * s}; }
  constexpr PlanarPoint operator/(double s) const { return {x / s, y / s}; }
  PlanarPoint& operator+=(PlanarPoint o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  PlanarPoint& operator-=(PlanarPoint o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  constexpr bool operator==(const PlanarPoint&) const = default;
};

using Vec2 = PlanarPoint;

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(PlanarPoint a, PlanarPoint b) { return norm(a - b); }
inline double direction_of(Vec2 a) { return std::atan2(a.y, a.x); }
inline Vec2 unit(double theta) { return {std::cos(theta), std::sin(theta)}; }

/// Shifts `angle` by a multiple of 2π into [lo, lo + 2π).
inline double wrap_angle(double angle, double lo) {
  double shifted = std::fmod(angle - lo, kTwoPi);
  if (shifted < 0.0) shifted += kTwoPi;
  return lo + shifted;
}

/// Distance from `p` to the closed segment [a, b].
inline double point_segment_distance(PlanarPoint p, PlanarPoint a, PlanarPoint b) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(p, a);
  double s = dot(p - a, ab) / len2;
  s = s < 0.0 ? 0.0 : (s > 1.0 ? 1.0 : s);
  return distance(p, a + ab * s);
}

struct RaySegmentHit {
  double t;  // distance along the (unit) ray
  double s;  // parameter along the segment, 0 at a and 1 at b
};

/// Intersection of the ray origin + t·dir (dir unit) with segment [a, b].
/// Parallel configurations report no hit; callers treat collinear overlap
/// through the segment endpoints.
inline std::optional<RaySegmentHit> ray_segment(PlanarPoint origin, Vec2 dir, PlanarPoint a,
                                                PlanarPoint b, double slack) {
  const Vec2 ab = b - a;
  const double denom = cross(dir, ab);
  const double len = norm(ab);
  if (std::abs(denom) <= 1e-14 * len) return std::nullopt;
  const Vec2 ao = a - origin;
  const double t = cross(ao, ab) / denom;
  const double s = cross(ao, dir) / denom;
  const double s_slack = slack / len;
  if (s < -s_slack || s > 1.0 + s_slack) return std::nullopt;
  return RaySegmentHit{t, s};
}

/// Distance along the ray at which it meets the infinite line through a, b.
inline std::optional<double> ray_line(PlanarPoint origin, Vec2 dir, PlanarPoint a, PlanarPoint b) {
  const Vec2 ab = b - a;
  const double denom = cross(dir, ab);
  if (std::abs(denom) <= 1e-14 * norm(ab)) return std::nullopt;
  return cross(a - origin, ab) / denom;
}

/// Closed-segment intersection test with tolerance.
inline bool segments_intersect(PlanarPoint a, PlanarPoint b, PlanarPoint c, PlanarPoint d,
                               double tol) {
  const double d1 = cross(b - a, c - a);
  const double d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c);
  const double d4 = cross(d - c, b - c);
  const double lab = norm(b - a);
  const double lcd = norm(d - c);
  const bool proper = ((d1 > tol * lab && d2 < -tol * lab) || (d1 < -tol * lab && d2 > tol * lab)) &&
                      ((d3 > tol * lcd && d4 < -tol * lcd) || (d3 < -tol * lcd && d4 > tol * lcd));
  if (proper) return true;
  return point_segment_distance(c, a, b) <= tol || point_segment_distance(d, a, b) <= tol ||
         point_segment_distance(a, c, d) <= tol || point_segment_distance(b, c, d) <= tol;
}

}  // namespace tsurf
