// Circles on a translation surface and their planar developments.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tsurf/unfold.hpp"

namespace tsurf {

struct SurfaceCircle {
  int id = 0;
  SurfacePoint center;  // regular point or cone point
  double radius = 0.0;
};

/// Sector of the circle clipped to one polygon: the part of the disk reached
/// by rays from `center` with direction in [start, start + sweep] that enter
/// the polygon through `entry_edge` (-1 when the center is in the polygon).
struct DiskPiece {
  int polygon = 0;
  PlanarPoint center;
  double radius = 0.0;
  double start = 0.0;
  double sweep = 0.0;
  int entry_edge = -1;
};

struct EmbeddedCircle {
  int circle_id = 0;
  int multiplicity = 1;  // k for a cone point of angle 2kπ
  std::vector<DiskPiece> pieces;
};

struct Packing {
  std::shared_ptr<const Surface> surface;
  std::vector<SurfaceCircle> circles;
};

Packing make_packing(SurfaceSpec spec, std::vector<SurfaceCircle> circles,
                     double tol = kDefaultTol);

EmbeddedCircle develop_circle(const Surface& surface, const SurfaceCircle& circle,
                              std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// A straight path between two circle centers no longer than r_a + r_b + tol.
/// For a == b it is a loop at the center.
struct CircleLink {
  int a = 0;
  int b = 0;
  double length = 0.0;
  double depart = 0.0;  // angular position on circle a
  double arrive = 0.0;  // angular position on circle b
  double gap = 0.0;      // length - r_a - r_b; negative means overlap
  SurfacePoint point;    // at distance length * r_a / (r_a + r_b) from a
  PathHit hit;           // the path, developed from circle a
};

/// A straight path from a circle center to a singular point (other than the
/// center itself) no longer than r + tol.
struct ConeVisit {
  int circle = 0;
  int cone_point = 0;
  double length = 0.0;
  double depart = 0.0;  // angular position on the circle
  double arrive = 0.0;  // angle of the incoming direction at the cone point
  PathHit hit;
};

struct Proximity {
  std::vector<CircleLink> links;
  std::vector<ConeVisit> visits;
};

/// Every link and visit among `circles`, in a deterministic order.
Proximity proximity(const Surface& surface, const std::vector<SurfaceCircle>& circles,
                    double tol = kDefaultTol);

struct OverlapWitness {
  std::string kind;  // "loop", "singular-inside", "cone-point", "pair", "same-center"
  int a = 0;
  int b = 0;
  double depth = 0.0;
  SurfacePoint where;
};

struct CheckReport {
  bool ok = true;
  std::vector<OverlapWitness> witnesses;
};

CheckReport check_admissible(const Surface& surface, const SurfaceCircle& circle,
                             double tol = kDefaultTol);

/// Admissibility of every circle plus pairwise interior disjointness.
CheckReport check_packing(const Packing& packing, double tol = kDefaultTol);

}  // namespace tsurf
