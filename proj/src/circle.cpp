#include "tsurf/circle.hpp"

#include <algorithm>
#include <cmath>

#include "tsurf/errors.hpp"

namespace tsurf {

namespace {

bool same_center(const Surface& s, const SurfacePoint& a, const SurfacePoint& b, double tol) {
  if (a.is_cone_point() || b.is_cone_point()) return a.cone_point == b.cone_point;
  for (const SurfacePoint& pa : s.presentations(a))
    for (const SurfacePoint& pb : s.presentations(b))
      if (pa.polygon == pb.polygon && distance(pa.position, pb.position) <= tol) return true;
  return false;
}

double max_radius(const std::vector<SurfaceCircle>& circles) {
  double m = 0.0;
  for (const auto& c : circles) m = std::max(m, c.radius);
  return m;
}

// Boundary visits of the same cone point closer than a straight angle.
void cone_point_overlaps(const Surface& s, const std::vector<SurfaceCircle>& circles,
                         const std::vector<ConeVisit>& visits, double tol, bool same_circle,
                         std::vector<OverlapWitness>& out) {
  for (size_t i = 0; i < visits.size(); ++i) {
    for (size_t j = i + 1; j < visits.size(); ++j) {
      const ConeVisit& u = visits[i];
      const ConeVisit& v = visits[j];
      if (u.cone_point != v.cone_point) continue;
      if ((u.circle == v.circle) != same_circle) continue;
      const double ru = circles[u.circle].radius;
      const double rv = circles[v.circle].radius;
      if (std::abs(u.length - ru) > tol || std::abs(v.length - rv) > tol) continue;
      const double total = s.cone_point(u.cone_point).cone_angle;
      const double deficit = kPi - cyclic_gap(u.arrive, v.arrive, total);
      const double depth = deficit * std::min(ru, rv);
      if (depth > tol)
        out.push_back({"cone-point", circles[u.circle].id, circles[v.circle].id, depth,
                       SurfacePoint::at_cone(u.cone_point)});
    }
  }
}

}  // namespace

Packing make_packing(SurfaceSpec spec, std::vector<SurfaceCircle> circles, double tol) {
  Packing p;
  p.surface = std::make_shared<const Surface>(std::move(spec), tol);
  for (size_t i = 0; i < circles.size(); ++i) {
    SurfaceCircle& c = circles[i];
    c.id = static_cast<int>(i);
    if (!(c.radius > 0.0)) throw DomainError("circle radius must be positive");
    c.center = p.surface->canonicalize(c.center);
  }
  p.circles = std::move(circles);
  return p;
}

EmbeddedCircle develop_circle(const Surface& surface, const SurfaceCircle& circle,
                              std::optional<std::uint64_t> shuffle_seed) {
  if (!(circle.radius > 0.0)) throw DomainError("circle radius must be positive");
  DevelopmentOptions opt;
  opt.reach = circle.radius;
  opt.inclusive = false;
  opt.shuffle_seed = shuffle_seed;
  const Development dev(surface, circle.center, opt);
  EmbeddedCircle out;
  out.circle_id = circle.id;
  out.multiplicity = static_cast<int>(std::lround(dev.total_angle() / kTwoPi));
  for (const Cone& c : dev.cones())
    out.pieces.push_back({c.polygon, c.apex, circle.radius, c.lo, c.hi - c.lo, c.entry_edge});
  return out;
}

Proximity proximity(const Surface& surface, const std::vector<SurfaceCircle>& circles,
                    double tol) {
  Proximity out;
  const double rmax = max_radius(circles);
  for (size_t a = 0; a < circles.size(); ++a) {
    const SurfaceCircle& ca = circles[a];
    const SurfacePoint center = surface.canonicalize(ca.center);
    DevelopmentOptions opt;
    opt.reach = ca.radius + rmax + 2 * tol;
    const Development dev(surface, center, opt);
    for (size_t b = a; b < circles.size(); ++b) {
      const SurfaceCircle& cb = circles[b];
      for (const PathHit& h : dev.paths_to(cb.center, ca.radius + cb.radius + tol)) {
        CircleLink link;
        link.a = static_cast<int>(a);
        link.b = static_cast<int>(b);
        link.length = h.length;
        link.depart = h.angle;
        link.arrive = Development::arrival_angle(surface, h);
        link.gap = h.length - ca.radius - cb.radius;
        link.point = dev.point_along(h, h.length * ca.radius / (ca.radius + cb.radius));
        link.hit = h;
        out.links.push_back(link);
      }
    }
    for (const ConePoint& cp : surface.analysis().cone_points) {
      if (!cp.singular() || center.cone_point == cp.id) continue;
      for (const PathHit& h : dev.paths_to(SurfacePoint::at_cone(cp.id), ca.radius + tol)) {
        ConeVisit v;
        v.circle = static_cast<int>(a);
        v.cone_point = cp.id;
        v.length = h.length;
        v.depart = h.angle;
        v.arrive = Development::arrival_angle(surface, h);
        v.hit = h;
        out.visits.push_back(v);
      }
    }
  }
  return out;
}

CheckReport check_admissible(const Surface& surface, const SurfaceCircle& circle, double tol) {
  CheckReport report;
  const std::vector<SurfaceCircle> one{circle};
  const Proximity prox = proximity(surface, one, tol);
  for (const CircleLink& l : prox.links) {
    if (l.gap < -tol)
      report.witnesses.push_back({"loop", circle.id, circle.id, -l.gap, l.point});
  }
  for (const ConeVisit& v : prox.visits) {
    if (v.length < circle.radius - tol)
      report.witnesses.push_back({"singular-inside", circle.id, circle.id, circle.radius - v.length,
                                  SurfacePoint::at_cone(v.cone_point)});
  }
  cone_point_overlaps(surface, one, prox.visits, tol, true, report.witnesses);
  report.ok = report.witnesses.empty();
  return report;
}

CheckReport check_packing(const Packing& packing, double tol) {
  CheckReport report;
  const Surface& s = *packing.surface;
  const auto& circles = packing.circles;
  for (const SurfaceCircle& c : circles) {
    CheckReport one = check_admissible(s, c, tol);
    report.witnesses.insert(report.witnesses.end(), one.witnesses.begin(), one.witnesses.end());
  }
  for (size_t a = 0; a < circles.size(); ++a)
    for (size_t b = a + 1; b < circles.size(); ++b)
      if (same_center(s, circles[a].center, circles[b].center, tol))
        report.witnesses.push_back({"same-center", circles[a].id, circles[b].id,
                                    circles[a].radius + circles[b].radius, circles[a].center});
  const Proximity prox = proximity(s, circles, tol);
  for (const CircleLink& l : prox.links)
    if (l.a != l.b && l.gap < -tol)
      report.witnesses.push_back({"pair", circles[l.a].id, circles[l.b].id, -l.gap, l.point});
  cone_point_overlaps(s, circles, prox.visits, tol, false, report.witnesses);
  report.ok = report.witnesses.empty();
  return report;
}

}  // namespace tsurf
