// Tangency points of a packing and its contacts multigraph.
#pragma once

#include <vector>

#include "tsurf/circle.hpp"

namespace tsurf {

struct TangencyPoint {
  int id = 0;
  SurfacePoint location;  // canonical
  int a = 0;              // circle ids, a <= b; a == b for a self-tangency
  int b = 0;
  /// Angular positions of the point on circles a and b. For a self-tangency
  /// these are the two positions where the circle meets itself.
  double angle_a = 0.0;
  double angle_b = 0.0;
  bool at_cone_point = false;
  std::vector<SurfacePoint> witnesses;  // polygon presentations of the location
};

/// Circle ids in a packing are their indices; make_packing enforces this.
std::vector<TangencyPoint> find_tangencies(const Packing& packing, double tol = kDefaultTol);

struct GraphEdge {
  int tangency = 0;
  int a = 0;
  int b = 0;
};

struct ContactsGraph {
  std::vector<int> vertices;
  std::vector<GraphEdge> edges;
};

ContactsGraph build_graph(const Packing& packing, const std::vector<TangencyPoint>& tangencies);
ContactsGraph build_graph(const Packing& packing, double tol = kDefaultTol);

struct GraphStats {
  int max_multiedges = 0;  // between distinct vertices
  int max_loops = 0;       // on one vertex
};

GraphStats graph_stats(const ContactsGraph& graph);

/// Loop count per vertex and edge count per unordered vertex pair.
std::vector<std::vector<int>> multiplicity_matrix(const ContactsGraph& graph);

}  // namespace tsurf
