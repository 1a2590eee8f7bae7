// Straight-line development of a surface around a source point.
//
// Rays leaving the source are grouped into cones. A cone lives in one
// polygon, in that polygon's coordinate frame: it is the set of rays from
// `apex` with direction in [lo, hi] that enter the polygon through its entry
// edge (or start inside it, for seed cones). Crossing a paired edge
// translates the apex, so directions are global on a translation surface.
// Rays that pass through a singular vertex stop being geodesics there; the
// cone boundary records that as a block distance.
#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "tsurf/surface.hpp"

namespace tsurf {

inline constexpr double kNoBlock = std::numeric_limits<double>::infinity();

struct Cone {
  int polygon = 0;
  PlanarPoint apex;
  double lo = 0.0;
  double hi = 0.0;
  int entry_edge = -1;  // -1 for seed cones
  double sheet = 0.0;   // cumulative source angle = direction + sheet
  double lo_block = kNoBlock;
  double hi_block = kNoBlock;
  int parent = -1;
  double near = 0.0;  // distance from apex to the entry window
};

/// Where a ray leaves a polygon.
struct RayExit {
  double t = kNoBlock;
  int edge = -1;
  int vertex = -1;  // exit exactly through this vertex, else -1
  bool exit_singular = false;
  double first_singular = kNoBlock;  // singular vertex grazed before the exit
};

RayExit trace_exit(const Surface& surface, int polygon, PlanarPoint origin, double theta,
                   double t_min, int skip_edge, double eps);

struct PathHit {
  int cone = -1;
  double direction = 0.0;  // global direction of the path at the source
  double length = 0.0;
  double angle = 0.0;      // cumulative angle at the source, in [0, total_angle)
  SurfacePoint end;        // presentation of the target that was reached
  Corner end_corner{-1, -1};  // corner reached when the target is a vertex
};

struct DevelopmentOptions {
  double reach = 1.0;
  /// Keep windows at distance exactly `reach` (path searches) or drop them
  /// (disk development, where only positive overlap counts).
  bool inclusive = true;
  /// Maximum number of cones; 0 selects 10 * edges * ceil(reach / min_edge).
  int max_cones = 0;
  /// Process the frontier in a shuffled order (ordering-independence tests).
  std::optional<std::uint64_t> shuffle_seed;
};

class Development {
 public:
  Development(const Surface& surface, const SurfacePoint& source, DevelopmentOptions options);

  const Surface& surface() const { return *surface_; }
  const SurfacePoint& source() const { return source_; }
  const std::vector<Cone>& cones() const { return cones_; }
  double reach() const { return options_.reach; }
  double eps() const { return eps_; }
  /// Total angle around the source: 2π, or the cone angle.
  double total_angle() const { return total_angle_; }

  double entry_distance(const Cone& cone, double theta) const;
  RayExit exit_of(const Cone& cone, double theta) const;

  /// Locates `q` (a point of the cone's polygon) in the cone.
  std::optional<PathHit> locate(int cone_index, PlanarPoint q, double max_length) const;

  /// All distinct straight paths from the source to `target` of length in
  /// (eps, max_length]. Paths through singular vertices are excluded.
  std::vector<PathHit> paths_to(const SurfacePoint& target, double max_length) const;

  /// The point at distance s along a path (s no larger than its length).
  SurfacePoint point_along(const PathHit& hit, double s) const;

  /// Cumulative angle at a vertex target, from the reversed arrival direction.
  static double arrival_angle(const Surface& surface, const PathHit& hit);

 private:
  void expand(int index, std::vector<int>& frontier);
  double block_at(const Cone& cone, double theta) const;

  const Surface* surface_;
  SurfacePoint source_;
  DevelopmentOptions options_;
  double eps_;
  double total_angle_ = kTwoPi;
  std::vector<Cone> cones_;
  std::vector<std::vector<int>> by_polygon_;
};

/// Reduces an angle into [0, total).
double wrap_total(double a, double total);

/// Cyclic distance between two angles on a circle of circumference `total`.
double cyclic_gap(double a, double b, double total);

}  // namespace tsurf
