// Translation surfaces given as polygons with translation-paired edges.
#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "tsurf/geometry.hpp"

namespace tsurf {

/// Simple polygon, vertices in counter-clockwise order.
struct PolygonSpec {
  std::vector<PlanarPoint> vertices;
};

/// Edge i of a polygon runs from vertex i to vertex (i + 1) mod n.
struct EdgeRef {
  int polygon = 0;
  int edge = 0;
  auto operator<=>(const EdgeRef&) const = default;
};

struct Pairing {
  EdgeRef a;
  EdgeRef b;
};

struct SurfaceSpec {
  std::vector<PolygonSpec> polygons;
  std::vector<Pairing> pairings;
};

struct Violation {
  std::string kind;
  std::string message;
  std::optional<EdgeRef> a;
  std::optional<EdgeRef> b;
  double discrepancy = 0.0;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Checks every surface invariant. Throws StructuralError when an index is
/// out of range; geometric problems are reported as violations.
ValidationReport validate_spec(const SurfaceSpec& spec, double tol = kDefaultTol);

struct Corner {
  int polygon = 0;
  int vertex = 0;
  auto operator<=>(const Corner&) const = default;
};

/// An identified vertex class. Regular points (order 0) are included.
struct ConePoint {
  int id = 0;
  std::vector<Corner> vertex_cycle;  // counter-clockwise around the point
  double cone_angle = 0.0;
  int order = 0;

  bool singular() const { return order > 0; }
};

struct SurfaceAnalysis {
  std::vector<ConePoint> cone_points;
  int euler_characteristic = 0;
  int genus = 0;
  std::vector<int> stratum;  // nonzero orders, descending
};

SurfaceAnalysis analyze(const SurfaceSpec& spec, double tol = kDefaultTol);

/// A point of the surface: either a polygon point or an identified vertex.
struct SurfacePoint {
  int polygon = -1;
  PlanarPoint position;
  int cone_point = -1;

  static SurfacePoint at(int polygon, PlanarPoint position) { return {polygon, position, -1}; }
  static SurfacePoint at_cone(int id) { return {-1, {}, id}; }
  bool is_cone_point() const { return cone_point >= 0; }
};

SurfacePoint canonicalize_point(const SurfaceSpec& spec, const SurfacePoint& p,
                                double tol = kDefaultTol);

/// (x, y) -> (a x, b y) on every vertex; pairings unchanged.
SurfaceSpec affine_transform(const SurfaceSpec& spec, double a, double b);

/// Validated surface with its gluing data precomputed. Immutable.
class Surface {
 public:
  explicit Surface(SurfaceSpec spec, double tol = kDefaultTol);

  const SurfaceSpec& spec() const { return spec_; }
  const SurfaceAnalysis& analysis() const { return analysis_; }
  double tol() const { return tol_; }

  int polygon_count() const { return static_cast<int>(spec_.polygons.size()); }
  const std::vector<PlanarPoint>& vertices(int polygon) const {
    return spec_.polygons[polygon].vertices;
  }
  int size(int polygon) const { return static_cast<int>(vertices(polygon).size()); }
  PlanarPoint vertex(int polygon, int v) const;
  PlanarPoint edge_start(EdgeRef e) const { return vertex(e.polygon, e.edge); }
  PlanarPoint edge_end(EdgeRef e) const { return vertex(e.polygon, e.edge + 1); }

  EdgeRef partner(EdgeRef e) const { return partner_[offset_[e.polygon] + e.edge]; }
  /// Translation carrying points of `e` onto its partner.
  Vec2 translation(EdgeRef e) const { return shift_[offset_[e.polygon] + e.edge]; }

  int cone_point_of(int polygon, int v) const;
  bool singular_vertex(int polygon, int v) const;
  double corner_angle(int polygon, int v) const { return corner_angle_[offset_[polygon] + v]; }
  /// Direction of the outgoing edge at a corner; the corner spans
  /// [corner_start, corner_start + corner_angle].
  double corner_start(int polygon, int v) const { return corner_start_[offset_[polygon] + v]; }
  /// Offset from local direction to the cone's cumulative angular coordinate.
  double corner_sheet(int polygon, int v) const { return corner_sheet_[offset_[polygon] + v]; }
  const ConePoint& cone_point(int id) const { return analysis_.cone_points[id]; }

  /// Minimum edge length.
  double min_edge() const { return min_edge_; }
  int edge_total() const { return offset_.back(); }
  double area() const;
  double polygon_area(int polygon) const;

  bool contains(int polygon, PlanarPoint p) const;
  SurfacePoint canonicalize(const SurfacePoint& p) const;
  /// All polygon presentations of a point: one for the interior, two on a
  /// paired edge, one per corner for a cone point.
  std::vector<SurfacePoint> presentations(const SurfacePoint& p) const;
  /// Moves a regular point straight by `displacement`. Empty when the path
  /// runs into a polygon vertex.
  std::optional<SurfacePoint> move(const SurfacePoint& from, Vec2 displacement) const;

 private:
  SurfaceSpec spec_;
  double tol_;
  std::vector<int> offset_;
  std::vector<EdgeRef> partner_;
  std::vector<Vec2> shift_;
  std::vector<int> vertex_class_;
  std::vector<double> corner_angle_;
  std::vector<double> corner_start_;
  std::vector<double> corner_sheet_;
  SurfaceAnalysis analysis_;
  double min_edge_ = 0.0;
};

}  // namespace tsurf
