#include "tsurf/unfold.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>

#include "tsurf/errors.hpp"

namespace tsurf {

namespace {

constexpr double kAngleEps = 1e-12;

bool in_corner(const Surface& s, int polygon, int v, double theta, double slack) {
  const double start = s.corner_start(polygon, v);
  const double w = wrap_angle(theta, start - slack);
  return w <= start + s.corner_angle(polygon, v) + slack;
}

}  // namespace

double wrap_total(double a, double total) {
  double r = std::fmod(a, total);
  if (r < 0.0) r += total;
  return r >= total ? 0.0 : r;
}

double cyclic_gap(double a, double b, double total) {
  double d = std::fmod(std::abs(a - b), total);
  return std::min(d, total - d);
}

RayExit trace_exit(const Surface& surface, int polygon, PlanarPoint origin, double theta,
                   double t_min, int skip_edge, double eps) {
  RayExit out;
  const Vec2 u = unit(theta);
  const int n = surface.size(polygon);
  for (int e = 0; e < n; ++e) {
    if (e == skip_edge) continue;
    const EdgeRef ref{polygon, e};
    const PlanarPoint a = surface.edge_start(ref);
    const PlanarPoint b = surface.edge_end(ref);
    const auto hit = ray_segment(origin, u, a, b, eps);
    if (!hit || hit->t <= t_min + eps) continue;
    const double len = distance(a, b);
    int v = -1;
    if (hit->s * len <= eps) v = e;
    else if ((1.0 - hit->s) * len <= eps) v = (e + 1) % n;
    if (v >= 0) {
      const double slack = eps / std::max(hit->t, eps);
      if (in_corner(surface, polygon, v, theta, slack)) {
        // grazes the vertex and carries on inside the polygon
        if (surface.singular_vertex(polygon, v))
          out.first_singular = std::min(out.first_singular, hit->t);
        continue;
      }
    }
    if (hit->t < out.t) {
      out.t = hit->t;
      out.edge = e;
      out.vertex = v;
    }
  }
  if (out.vertex >= 0) out.exit_singular = surface.singular_vertex(polygon, out.vertex);
  if (out.first_singular >= out.t - eps) out.first_singular = kNoBlock;
  return out;
}

Development::Development(const Surface& surface, const SurfacePoint& source,
                         DevelopmentOptions options)
    : surface_(&surface), source_(surface.canonicalize(source)), options_(options),
      eps_(surface.tol()) {
  if (!(options_.reach > 0.0)) throw DomainError("development reach must be positive");
  by_polygon_.resize(surface.polygon_count());
  std::vector<int> frontier;
  auto seed = [&](Cone c) {
    by_polygon_[c.polygon].push_back(static_cast<int>(cones_.size()));
    frontier.push_back(static_cast<int>(cones_.size()));
    cones_.push_back(c);
  };

  if (source_.is_cone_point()) {
    const ConePoint& cp = surface.cone_point(source_.cone_point);
    total_angle_ = cp.cone_angle;
    for (const Corner& c : cp.vertex_cycle) {
      Cone cone;
      cone.polygon = c.polygon;
      cone.apex = surface.vertex(c.polygon, c.vertex);
      cone.lo = surface.corner_start(c.polygon, c.vertex);
      cone.hi = cone.lo + surface.corner_angle(c.polygon, c.vertex);
      cone.sheet = surface.corner_sheet(c.polygon, c.vertex);
      seed(cone);
    }
  } else {
    for (const SurfacePoint& pres : surface.presentations(source_)) {
      Cone cone;
      cone.polygon = pres.polygon;
      cone.apex = pres.position;
      int on_edge = -1;
      for (int e = 0; e < surface.size(pres.polygon); ++e) {
        const EdgeRef ref{pres.polygon, e};
        if (point_segment_distance(pres.position, surface.edge_start(ref), surface.edge_end(ref)) <=
            surface.tol()) {
          on_edge = e;
          break;
        }
      }
      if (on_edge >= 0) {
        const EdgeRef ref{pres.polygon, on_edge};
        cone.lo = direction_of(surface.edge_end(ref) - surface.edge_start(ref));
        cone.hi = cone.lo + kPi;
      } else {
        cone.lo = direction_of(surface.vertex(pres.polygon, 0) - pres.position);
        cone.hi = cone.lo + kTwoPi;
      }
      seed(cone);
    }
  }

  int budget = options_.max_cones;
  if (budget <= 0) {
    const double ratio = std::ceil(options_.reach / surface.min_edge());
    budget = static_cast<int>(std::min(1e7, 10.0 * surface.edge_total() * std::max(1.0, ratio)));
  }

  std::mt19937_64 rng(options_.shuffle_seed.value_or(0));
  std::deque<int> queue(frontier.begin(), frontier.end());
  while (!queue.empty()) {
    int index;
    if (options_.shuffle_seed) {
      std::uniform_int_distribution<size_t> pick(0, queue.size() - 1);
      const size_t k = pick(rng);
      index = queue[k];
      queue.erase(queue.begin() + static_cast<std::ptrdiff_t>(k));
    } else {
      index = queue.front();
      queue.pop_front();
    }
    std::vector<int> children;
    expand(index, children);
    for (int c : children) queue.push_back(c);
    if (static_cast<int>(cones_.size()) > budget)
      throw RadiusTooLargeError("development exceeded its budget of " + std::to_string(budget) +
                                " pieces");
  }
}

double Development::entry_distance(const Cone& cone, double theta) const {
  if (cone.entry_edge < 0) return 0.0;
  const EdgeRef ref{cone.polygon, cone.entry_edge};
  const auto t = ray_line(cone.apex, unit(theta), surface_->edge_start(ref), surface_->edge_end(ref));
  return t ? std::max(0.0, *t) : 0.0;
}

RayExit Development::exit_of(const Cone& cone, double theta) const {
  return trace_exit(*surface_, cone.polygon, cone.apex, theta, entry_distance(cone, theta),
                    cone.entry_edge, eps_);
}

double Development::block_at(const Cone& cone, double theta) const {
  const RayExit ex = exit_of(cone, theta);
  double b = ex.first_singular;
  if (ex.exit_singular) b = std::min(b, ex.t);
  if (std::abs(theta - cone.lo) <= kAngleEps) b = std::min(b, cone.lo_block);
  if (std::abs(theta - cone.hi) <= kAngleEps) b = std::min(b, cone.hi_block);
  return b;
}

void Development::expand(int index, std::vector<int>& frontier) {
  const Cone cone = cones_[index];
  const Surface& s = *surface_;
  std::vector<double> crit{cone.lo, cone.hi};
  for (int v = 0; v < s.size(cone.polygon); ++v) {
    const Vec2 d = s.vertex(cone.polygon, v) - cone.apex;
    if (norm(d) <= eps_) continue;
    const double th = wrap_angle(direction_of(d), cone.lo);
    if (th > cone.lo + kAngleEps && th < cone.hi - kAngleEps) crit.push_back(th);
  }
  std::sort(crit.begin(), crit.end());
  crit.erase(std::unique(crit.begin(), crit.end(),
                         [](double a, double b) { return b - a <= kAngleEps; }),
             crit.end());

  struct Run {
    double a, b;
    int edge;
  };
  std::vector<Run> runs;
  for (size_t k = 0; k + 1 < crit.size(); ++k) {
    const double a = crit[k];
    const double b = crit[k + 1];
    if (b - a <= kAngleEps) continue;
    const double mid = 0.5 * (a + b);
    const double t_in = entry_distance(cone, mid);
    if (t_in > options_.reach) continue;
    const RayExit ex = exit_of(cone, mid);
    if (ex.edge < 0) continue;
    if (!runs.empty() && runs.back().edge == ex.edge && runs.back().b == a &&
        block_at(cone, a) == kNoBlock) {
      runs.back().b = b;
      continue;
    }
    runs.push_back({a, b, ex.edge});
  }

  for (const Run& run : runs) {
    const EdgeRef ref{cone.polygon, run.edge};
    const PlanarPoint ea = s.edge_start(ref);
    const PlanarPoint eb = s.edge_end(ref);
    const auto ta = ray_line(cone.apex, unit(run.a), ea, eb);
    const auto tb = ray_line(cone.apex, unit(run.b), ea, eb);
    if (!ta || !tb) continue;
    const PlanarPoint wa = cone.apex + unit(run.a) * *ta;
    const PlanarPoint wb = cone.apex + unit(run.b) * *tb;
    const double near = point_segment_distance(cone.apex, wa, wb);
    if (options_.inclusive ? near > options_.reach + eps_ : near >= options_.reach - eps_) continue;
    const EdgeRef other = s.partner(ref);
    Cone child;
    child.polygon = other.polygon;
    child.apex = cone.apex + s.translation(ref);
    child.lo = run.a;
    child.hi = run.b;
    child.entry_edge = other.edge;
    child.sheet = cone.sheet;
    child.lo_block = block_at(cone, run.a);
    child.hi_block = block_at(cone, run.b);
    child.parent = index;
    child.near = near;
    by_polygon_[child.polygon].push_back(static_cast<int>(cones_.size()));
    frontier.push_back(static_cast<int>(cones_.size()));
    cones_.push_back(child);
  }
}

std::optional<PathHit> Development::locate(int cone_index, PlanarPoint q, double max_length) const {
  const Cone& cone = cones_[cone_index];
  const Vec2 d = q - cone.apex;
  const double t = norm(d);
  if (t <= eps_ || t > max_length + eps_) return std::nullopt;
  const double slack = eps_ / t;
  double theta = wrap_angle(direction_of(d), cone.lo - slack);
  if (theta > cone.hi + slack) return std::nullopt;
  theta = std::clamp(theta, cone.lo, cone.hi);
  const double t_in = entry_distance(cone, theta);
  if (t < t_in - eps_) return std::nullopt;
  const RayExit ex = exit_of(cone, theta);
  if (t > ex.t + eps_) return std::nullopt;
  if (ex.first_singular < t - eps_) return std::nullopt;
  if ((theta - cone.lo) * t <= eps_ && t > cone.lo_block + eps_) return std::nullopt;
  if ((cone.hi - theta) * t <= eps_ && t > cone.hi_block + eps_) return std::nullopt;
  PathHit hit;
  hit.cone = cone_index;
  hit.direction = theta;
  hit.length = t;
  hit.angle = wrap_total(theta + cone.sheet, total_angle_);
  return hit;
}

std::vector<PathHit> Development::paths_to(const SurfacePoint& target, double max_length) const {
  const Surface& s = *surface_;
  const SurfacePoint canon = s.canonicalize(target);
  std::vector<PathHit> found;
  auto consider = [&](int polygon, PlanarPoint q, Corner corner) {
    for (int ci : by_polygon_[polygon]) {
      auto hit = locate(ci, q, max_length);
      if (!hit) continue;
      // A vertex is reached only from inside one of its corners, and never at
      // the entry window of a cone (the parent cone reaches it there).
      if (corner.polygon >= 0) {
        if (!in_corner(s, corner.polygon, corner.vertex, hit->direction + kPi, eps_ / hit->length))
          continue;
        if (cones_[ci].entry_edge >= 0 &&
            hit->length <= entry_distance(cones_[ci], hit->direction) + eps_)
          continue;
      }
      hit->end = SurfacePoint::at(polygon, q);
      hit->end_corner = corner;
      bool duplicate = false;
      for (const PathHit& h : found) {
        if (std::abs(h.length - hit->length) <= 10 * eps_ &&
            cyclic_gap(h.angle, hit->angle, total_angle_) * hit->length <= 10 * eps_) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) found.push_back(*hit);
    }
  };
  if (canon.is_cone_point()) {
    for (const Corner& c : s.cone_point(canon.cone_point).vertex_cycle)
      consider(c.polygon, s.vertex(c.polygon, c.vertex), c);
  } else {
    for (const SurfacePoint& pres : s.presentations(canon))
      consider(pres.polygon, pres.position, Corner{-1, -1});
  }
  const double eps = eps_;
  std::sort(found.begin(), found.end(), [eps](const PathHit& a, const PathHit& b) {
    if (std::abs(a.length - b.length) > 10 * eps) return a.length < b.length;
    return a.angle < b.angle;
  });
  return found;
}

SurfacePoint Development::point_along(const PathHit& hit, double s) const {
  int ci = hit.cone;
  while (cones_[ci].parent >= 0 && entry_distance(cones_[ci], hit.direction) > s + eps_)
    ci = cones_[ci].parent;
  const Cone& c = cones_[ci];
  PlanarPoint p = c.apex + unit(hit.direction) * s;
  // the point may sit a rounding error outside the polygon
  if (!surface_->contains(c.polygon, p)) {
    double best = kNoBlock;
    PlanarPoint snapped = p;
    for (int e = 0; e < surface_->size(c.polygon); ++e) {
      const EdgeRef ref{c.polygon, e};
      const PlanarPoint a = surface_->edge_start(ref);
      const PlanarPoint b = surface_->edge_end(ref);
      const double dd = point_segment_distance(p, a, b);
      if (dd < best) {
        best = dd;
        const Vec2 ab = b - a;
        double u = std::clamp(dot(p - a, ab) / dot(ab, ab), 0.0, 1.0);
        snapped = a + ab * u;
      }
    }
    p = snapped;
  }
  return surface_->canonicalize(SurfacePoint::at(c.polygon, p));
}

double Development::arrival_angle(const Surface& surface, const PathHit& hit) {
  const double back = hit.direction + kPi;
  if (hit.end_corner.polygon < 0) return wrap_angle(back, 0.0);
  const Corner c = hit.end_corner;
  const double start = surface.corner_start(c.polygon, c.vertex);
  double local = wrap_angle(back, start - 1e-9);
  local = std::min(local, start + surface.corner_angle(c.polygon, c.vertex));
  const double total = surface.cone_point(surface.cone_point_of(c.polygon, c.vertex)).cone_angle;
  return wrap_total(local + surface.corner_sheet(c.polygon, c.vertex), total);
}

}  // namespace tsurf
