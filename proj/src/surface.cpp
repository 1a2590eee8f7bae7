#include "tsurf/surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "tsurf/errors.hpp"

namespace tsurf {

namespace {

double signed_area(const std::vector<PlanarPoint>& poly) {
  double a = 0.0;
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) a += cross(poly[i], poly[(i + 1) % n]);
  return 0.5 * a;
}

std::string edge_name(EdgeRef e) {
  std::ostringstream os;
  os << "(" << e.polygon << "," << e.edge << ")";
  return os.str();
}

bool proper_or_touching(PlanarPoint a, PlanarPoint b, PlanarPoint c, PlanarPoint d, double tol) {
  return segments_intersect(a, b, c, d, tol);
}

bool is_simple(const std::vector<PlanarPoint>& poly, double tol) {
  const int n = static_cast<int>(poly.size());
  for (int i = 0; i < n; ++i) {
    const PlanarPoint a = poly[i];
    const PlanarPoint b = poly[(i + 1) % n];
    for (int j = i + 1; j < n; ++j) {
      const PlanarPoint c = poly[j];
      const PlanarPoint d = poly[(j + 1) % n];
      const bool adjacent_next = (j == i + 1);
      const bool adjacent_prev = (i == 0 && j == n - 1);
      if (adjacent_next) {
        // shared vertex b == c; folding back means d lies on [a, b] or a on [c, d]
        if (point_segment_distance(d, a, b) <= tol || point_segment_distance(a, c, d) <= tol)
          return false;
        continue;
      }
      if (adjacent_prev) {
        if (point_segment_distance(c, a, b) <= tol || point_segment_distance(b, c, d) <= tol)
          return false;
        continue;
      }
      if (proper_or_touching(a, b, c, d, tol)) return false;
    }
  }
  return true;
}

void check_indices(const SurfaceSpec& spec) {
  const int np = static_cast<int>(spec.polygons.size());
  auto check = [&](EdgeRef e) {
    if (e.polygon < 0 || e.polygon >= np)
      throw StructuralError("pairing references polygon " + std::to_string(e.polygon) +
                            " out of range");
    const int ne = static_cast<int>(spec.polygons[e.polygon].vertices.size());
    if (e.edge < 0 || e.edge >= ne)
      throw StructuralError("pairing references edge " + edge_name(e) + " out of range");
  };
  for (const Pairing& p : spec.pairings) {
    check(p.a);
    check(p.b);
  }
}

Vec2 edge_vector(const SurfaceSpec& spec, EdgeRef e) {
  const auto& v = spec.polygons[e.polygon].vertices;
  const int n = static_cast<int>(v.size());
  return v[(e.edge + 1) % n] - v[e.edge];
}

}  // namespace

ValidationReport validate_spec(const SurfaceSpec& spec, double tol) {
  check_indices(spec);
  ValidationReport report;
  auto add = [&](Violation v) {
    report.ok = false;
    report.violations.push_back(std::move(v));
  };

  if (spec.polygons.empty()) add({"empty", "surface has no polygons", {}, {}, 0.0});

  for (size_t p = 0; p < spec.polygons.size(); ++p) {
    const auto& poly = spec.polygons[p].vertices;
    const std::string where = "polygon " + std::to_string(p);
    if (poly.size() < 3) {
      add({"degenerate_polygon", where + " has fewer than 3 vertices", {}, {}, 0.0});
      continue;
    }
    bool finite = true;
    for (const auto& v : poly) finite = finite && std::isfinite(v.x) && std::isfinite(v.y);
    if (!finite) {
      add({"non_finite", where + " has a non-finite coordinate", {}, {}, 0.0});
      continue;
    }
    bool distinct = true;
    for (size_t i = 0; i < poly.size(); ++i)
      if (distance(poly[i], poly[(i + 1) % poly.size()]) <= tol) distinct = false;
    if (!distinct) {
      add({"repeated_vertex", where + " has coincident consecutive vertices", {}, {}, 0.0});
      continue;
    }
    const double area = signed_area(poly);
    if (area <= tol) {
      add({"orientation", where + " is not counter-clockwise", {}, {}, area});
      continue;
    }
    if (!is_simple(poly, tol)) add({"not_simple", where + " boundary self-intersects", {}, {}, 0.0});
  }

  std::map<EdgeRef, int> uses;
  for (const Pairing& pr : spec.pairings) {
    ++uses[pr.a];
    ++uses[pr.b];
    if (pr.a == pr.b) {
      add({"self_paired", "edge " + edge_name(pr.a) + " is paired with itself", pr.a, pr.b, 0.0});
      continue;
    }
    const Vec2 va = edge_vector(spec, pr.a);
    const Vec2 vb = edge_vector(spec, pr.b);
    const double mismatch = norm(va + vb);
    if (mismatch > tol * std::max(1.0, norm(va))) {
      add({"not_translation",
           "edges " + edge_name(pr.a) + " and " + edge_name(pr.b) +
               " are unequal or not antiparallel",
           pr.a, pr.b, mismatch});
    }
  }
  for (size_t p = 0; p < spec.polygons.size(); ++p) {
    for (size_t e = 0; e < spec.polygons[p].vertices.size(); ++e) {
      const EdgeRef ref{static_cast<int>(p), static_cast<int>(e)};
      const auto it = uses.find(ref);
      const int count = it == uses.end() ? 0 : it->second;
      if (count != 1)
        add({"pairing_count",
             "edge " + edge_name(ref) + " appears in " + std::to_string(count) + " pairings", ref,
             {}, static_cast<double>(count)});
    }
  }

  // connectivity through the pairings
  if (spec.polygons.size() > 1) {
    std::vector<int> parent(spec.polygons.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Pairing& pr : spec.pairings) parent[find(pr.a.polygon)] = find(pr.b.polygon);
    for (size_t p = 1; p < spec.polygons.size(); ++p)
      if (find(static_cast<int>(p)) != find(0)) {
        add({"disconnected", "polygon " + std::to_string(p) + " is not glued to polygon 0", {}, {},
             0.0});
        break;
      }
  }
  return report;
}

Surface::Surface(SurfaceSpec spec, double tol) : spec_(std::move(spec)), tol_(tol) {
  const ValidationReport report = validate_spec(spec_, tol_);
  if (!report.ok) throw InvalidSurfaceError(report.violations.front().message);

  offset_.assign(1, 0);
  for (const auto& poly : spec_.polygons)
    offset_.push_back(offset_.back() + static_cast<int>(poly.vertices.size()));
  const int total = offset_.back();
  partner_.resize(total);
  shift_.resize(total);
  for (const Pairing& pr : spec_.pairings) {
    partner_[offset_[pr.a.polygon] + pr.a.edge] = pr.b;
    partner_[offset_[pr.b.polygon] + pr.b.edge] = pr.a;
    // start of a maps to end of b
    shift_[offset_[pr.a.polygon] + pr.a.edge] = edge_end(pr.b) - edge_start(pr.a);
    shift_[offset_[pr.b.polygon] + pr.b.edge] = edge_end(pr.a) - edge_start(pr.b);
  }

  min_edge_ = std::numeric_limits<double>::infinity();
  corner_angle_.resize(total);
  corner_start_.resize(total);
  corner_sheet_.resize(total);
  for (int p = 0; p < polygon_count(); ++p) {
    for (int v = 0; v < size(p); ++v) {
      const Vec2 out = vertex(p, v + 1) - vertex(p, v);
      const Vec2 in = vertex(p, v - 1) - vertex(p, v);
      const double start = direction_of(out);
      double angle = wrap_angle(direction_of(in), start) - start;
      corner_angle_[offset_[p] + v] = angle;
      corner_start_[offset_[p] + v] = start;
      min_edge_ = std::min(min_edge_, norm(out));
    }
  }

  // Corner walk: from a corner, cross its incoming edge to the partner edge,
  // whose start vertex is the next corner counter-clockwise.
  vertex_class_.assign(total, -1);
  for (int p = 0; p < polygon_count(); ++p) {
    for (int v = 0; v < size(p); ++v) {
      if (vertex_class_[offset_[p] + v] >= 0) continue;
      ConePoint cp;
      cp.id = static_cast<int>(analysis_.cone_points.size());
      Corner c{p, v};
      double cumulative = corner_start(p, v);
      while (vertex_class_[offset_[c.polygon] + c.vertex] < 0) {
        const int idx = offset_[c.polygon] + c.vertex;
        vertex_class_[idx] = cp.id;
        cp.vertex_cycle.push_back(c);
        corner_sheet_[idx] = cumulative - corner_start_[idx];
        cumulative += corner_angle_[idx];
        cp.cone_angle += corner_angle_[idx];
        const int n = size(c.polygon);
        const EdgeRef incoming{c.polygon, (c.vertex + n - 1) % n};
        const EdgeRef next = partner(incoming);
        c = Corner{next.polygon, next.edge};
      }
      if (!(c == cp.vertex_cycle.front()))
        throw InternalConsistencyError("corner walk did not close into a cycle");
      const double turns = cp.cone_angle / kTwoPi;
      const double k = std::round(turns);
      if (std::abs(turns - k) >= 1e-7 || k < 1.0) {
        std::ostringstream os;
        os << "cone angle " << cp.cone_angle << " at vertex class " << cp.id
           << " is not a multiple of 2*pi";
        throw InconsistentSurfaceError(os.str());
      }
      cp.order = static_cast<int>(k) - 1;
      analysis_.cone_points.push_back(std::move(cp));
    }
  }

  int order_sum = 0;
  for (const auto& cp : analysis_.cone_points) {
    order_sum += cp.order;
    if (cp.order > 0) analysis_.stratum.push_back(cp.order);
  }
  std::sort(analysis_.stratum.rbegin(), analysis_.stratum.rend());
  const int chi_gauss_bonnet = -order_sum;
  const int chi_cells = static_cast<int>(analysis_.cone_points.size()) -
                        static_cast<int>(spec_.pairings.size()) + polygon_count();
  if (chi_gauss_bonnet != chi_cells)
    throw InternalConsistencyError("Euler characteristic mismatch: Gauss-Bonnet gives " +
                                   std::to_string(chi_gauss_bonnet) + ", cell count gives " +
                                   std::to_string(chi_cells));
  if ((2 - chi_cells) % 2 != 0 || chi_cells > 2)
    throw InternalConsistencyError("Euler characteristic " + std::to_string(chi_cells) +
                                   " is not that of a closed orientable surface");
  analysis_.euler_characteristic = chi_cells;
  analysis_.genus = (2 - chi_cells) / 2;
}

PlanarPoint Surface::vertex(int polygon, int v) const {
  const auto& vs = vertices(polygon);
  const int n = static_cast<int>(vs.size());
  return vs[((v % n) + n) % n];
}

int Surface::cone_point_of(int polygon, int v) const {
  const int n = size(polygon);
  return vertex_class_[offset_[polygon] + ((v % n) + n) % n];
}

bool Surface::singular_vertex(int polygon, int v) const {
  return analysis_.cone_points[cone_point_of(polygon, v)].singular();
}

double Surface::polygon_area(int polygon) const { return signed_area(vertices(polygon)); }

double Surface::area() const {
  double a = 0.0;
  for (int p = 0; p < polygon_count(); ++p) a += polygon_area(p);
  return a;
}

bool Surface::contains(int polygon, PlanarPoint q) const {
  if (polygon < 0 || polygon >= polygon_count()) return false;
  const auto& poly = vertices(polygon);
  const size_t n = poly.size();
  bool inside = false;
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    const PlanarPoint a = poly[i];
    const PlanarPoint b = poly[j];
    if (point_segment_distance(q, a, b) <= tol_) return true;
    if ((a.y > q.y) != (b.y > q.y)) {
      const double x = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (q.x < x) inside = !inside;
    }
  }
  return inside;
}

SurfacePoint Surface::canonicalize(const SurfacePoint& p) const {
  if (p.is_cone_point()) {
    if (p.cone_point >= static_cast<int>(analysis_.cone_points.size()))
      throw DomainError("cone point id " + std::to_string(p.cone_point) + " out of range");
    return SurfacePoint::at_cone(p.cone_point);
  }
  if (!contains(p.polygon, p.position))
    throw DomainError("point lies outside polygon " + std::to_string(p.polygon));
  for (int v = 0; v < size(p.polygon); ++v)
    if (distance(vertex(p.polygon, v), p.position) <= tol_)
      return SurfacePoint::at_cone(cone_point_of(p.polygon, v));
  for (int e = 0; e < size(p.polygon); ++e) {
    const EdgeRef ref{p.polygon, e};
    const PlanarPoint a = edge_start(ref);
    const PlanarPoint b = edge_end(ref);
    if (point_segment_distance(p.position, a, b) > tol_) continue;
    const Vec2 ab = b - a;
    const double s = dot(p.position - a, ab) / dot(ab, ab);
    const PlanarPoint here = a + ab * s;
    const EdgeRef other = partner(ref);
    const PlanarPoint there = here + translation(ref);
    auto key = [](int poly, PlanarPoint q) { return std::make_tuple(poly, q.x, q.y); };
    if (key(other.polygon, there) < key(p.polygon, here))
      return SurfacePoint::at(other.polygon, there);
    return SurfacePoint::at(p.polygon, here);
  }
  return p;
}

std::vector<SurfacePoint> Surface::presentations(const SurfacePoint& raw) const {
  const SurfacePoint p = canonicalize(raw);
  std::vector<SurfacePoint> out;
  if (p.is_cone_point()) {
    for (const Corner& c : analysis_.cone_points[p.cone_point].vertex_cycle)
      out.push_back(SurfacePoint::at(c.polygon, vertex(c.polygon, c.vertex)));
    return out;
  }
  out.push_back(p);
  for (int e = 0; e < size(p.polygon); ++e) {
    const EdgeRef ref{p.polygon, e};
    if (point_segment_distance(p.position, edge_start(ref), edge_end(ref)) <= tol_) {
      out.push_back(SurfacePoint::at(partner(ref).polygon, p.position + translation(ref)));
      break;
    }
  }
  return out;
}

std::optional<SurfacePoint> Surface::move(const SurfacePoint& from, Vec2 displacement) const {
  if (from.is_cone_point()) return std::nullopt;
  double remaining = norm(displacement);
  int poly = from.polygon;
  PlanarPoint x = from.position;
  if (remaining == 0.0) return canonicalize(from);
  const Vec2 u = displacement / remaining;
  const double eps = 1e-3 * tol_;
  for (int guard = 0; guard < 100000; ++guard) {
    const int n = size(poly);
    // leaving immediately through an edge the point sits on
    int exit_edge = -1;
    double exit_t = std::numeric_limits<double>::infinity();
    for (int e = 0; e < n; ++e) {
      const EdgeRef ref{poly, e};
      const PlanarPoint a = edge_start(ref);
      const PlanarPoint b = edge_end(ref);
      const Vec2 ab = b - a;
      if (point_segment_distance(x, a, b) <= eps && cross(ab, u) < 0.0) {
        exit_edge = e;
        exit_t = 0.0;
        break;
      }
      const auto hit = ray_segment(x, u, a, b, 0.0);
      if (!hit || hit->t <= eps) continue;
      if (cross(ab, u) >= 0.0) continue;  // entering side
      if (hit->t < exit_t) {
        exit_t = hit->t;
        exit_edge = e;
      }
    }
    if (exit_edge < 0) return std::nullopt;
    if (exit_t >= remaining) {
      x += u * remaining;
      return SurfacePoint::at(poly, x);
    }
    const EdgeRef ref{poly, exit_edge};
    const PlanarPoint y = x + u * exit_t;
    const double len = norm(edge_end(ref) - edge_start(ref));
    const double s = dot(y - edge_start(ref), edge_end(ref) - edge_start(ref)) / (len * len);
    if (s * len <= tol_ || (1.0 - s) * len <= tol_) return std::nullopt;
    remaining -= exit_t;
    x = y + translation(ref);
    poly = partner(ref).polygon;
  }
  return std::nullopt;
}

SurfaceAnalysis analyze(const SurfaceSpec& spec, double tol) {
  const ValidationReport report = validate_spec(spec, tol);
  if (!report.ok) throw InvalidSurfaceError(report.violations.front().message);
  return Surface(spec, tol).analysis();
}

SurfacePoint canonicalize_point(const SurfaceSpec& spec, const SurfacePoint& p, double tol) {
  return Surface(spec, tol).canonicalize(p);
}

SurfaceSpec affine_transform(const SurfaceSpec& spec, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("affine scale factors must be positive");
  SurfaceSpec out = spec;
  for (auto& poly : out.polygons)
    for (auto& v : poly.vertices) v = {a * v.x, b * v.y};
  return out;
}

}  // namespace tsurf
