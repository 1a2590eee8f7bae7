#include "tsurf/contacts.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace tsurf {

namespace {

constexpr double kMergeTol = 1e-7;

bool same_location(const Surface& s, const SurfacePoint& p, const SurfacePoint& q) {
  if (p.is_cone_point() || q.is_cone_point()) return p.cone_point == q.cone_point;
  for (const SurfacePoint& a : s.presentations(p))
    for (const SurfacePoint& b : s.presentations(q))
      if (a.polygon == b.polygon && distance(a.position, b.position) <= kMergeTol) return true;
  return false;
}

std::tuple<int, int, int, double, double> sort_key(const TangencyPoint& t) {
  if (t.location.is_cone_point()) return {t.a, t.b, -1, t.location.cone_point, 0.0};
  return {t.a, t.b, t.location.polygon, t.location.position.x, t.location.position.y};
}

}  // namespace

std::vector<TangencyPoint> find_tangencies(const Packing& packing, double tol) {
  const Surface& s = *packing.surface;
  const auto& circles = packing.circles;
  const Proximity prox = proximity(s, circles, tol);

  std::vector<TangencyPoint> raw;
  for (const CircleLink& l : prox.links) {
    if (std::abs(l.gap) > tol) continue;
    TangencyPoint t;
    t.location = s.canonicalize(l.point);
    t.a = l.a;
    t.b = l.b;
    t.angle_a = l.depart;
    t.angle_b = l.arrive;
    raw.push_back(t);
  }
  const auto& visits = prox.visits;
  for (size_t i = 0; i < visits.size(); ++i) {
    const ConeVisit& u = visits[i];
    if (std::abs(u.length - circles[u.circle].radius) > tol) continue;
    for (size_t j = i + 1; j < visits.size(); ++j) {
      const ConeVisit& v = visits[j];
      if (v.cone_point != u.cone_point) continue;
      if (std::abs(v.length - circles[v.circle].radius) > tol) continue;
      const double total = s.cone_point(u.cone_point).cone_angle;
      const double gap = cyclic_gap(u.arrive, v.arrive, total);
      const double r = std::min(circles[u.circle].radius, circles[v.circle].radius);
      if (std::abs(gap - kPi) * r > tol) continue;
      TangencyPoint t;
      t.location = SurfacePoint::at_cone(u.cone_point);
      t.at_cone_point = true;
      const bool swap = v.circle < u.circle;
      t.a = swap ? v.circle : u.circle;
      t.b = swap ? u.circle : v.circle;
      t.angle_a = swap ? v.depart : u.depart;
      t.angle_b = swap ? u.depart : v.depart;
      raw.push_back(t);
    }
  }

  std::stable_sort(raw.begin(), raw.end(), [](const TangencyPoint& x, const TangencyPoint& y) {
    return sort_key(x) < sort_key(y);
  });
  std::vector<TangencyPoint> merged;
  for (const TangencyPoint& t : raw) {
    bool seen = false;
    for (const TangencyPoint& m : merged) {
      if (m.a == t.a && m.b == t.b && same_location(s, m.location, t.location)) {
        seen = true;
        break;
      }
    }
    if (!seen) merged.push_back(t);
  }
  for (size_t i = 0; i < merged.size(); ++i) {
    merged[i].id = static_cast<int>(i);
    merged[i].witnesses = s.presentations(merged[i].location);
  }
  return merged;
}

ContactsGraph build_graph(const Packing& packing, const std::vector<TangencyPoint>& tangencies) {
  ContactsGraph g;
  for (size_t i = 0; i < packing.circles.size(); ++i) g.vertices.push_back(static_cast<int>(i));
  for (const TangencyPoint& t : tangencies) g.edges.push_back({t.id, t.a, t.b});
  return g;
}

ContactsGraph build_graph(const Packing& packing, double tol) {
  return build_graph(packing, find_tangencies(packing, tol));
}

std::vector<std::vector<int>> multiplicity_matrix(const ContactsGraph& graph) {
  int n = 0;
  for (int v : graph.vertices) n = std::max(n, v + 1);
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (const GraphEdge& e : graph.edges) {
    ++m[e.a][e.b];
    if (e.a != e.b) ++m[e.b][e.a];
  }
  return m;
}

GraphStats graph_stats(const ContactsGraph& graph) {
  GraphStats st;
  const auto m = multiplicity_matrix(graph);
  for (size_t i = 0; i < m.size(); ++i) {
    st.max_loops = std::max(st.max_loops, m[i][i]);
    for (size_t j = i + 1; j < m.size(); ++j) st.max_multiedges = std::max(st.max_multiedges, m[i][j]);
  }
  return st;
}

}  // namespace tsurf
