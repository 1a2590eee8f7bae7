#include "tsurf/search.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "tsurf/constructions.hpp"
#include "tsurf/errors.hpp"
#include "tsurf/parallel.hpp"

namespace tsurf {

namespace {

constexpr double kMinLength = 0.2;
constexpr double kMaxLength = 5.0;
constexpr double kMinTurn = 0.02;

std::vector<PlanarPoint> octagon_vertices(const std::array<Vec2, 4>& sides) {
  std::vector<PlanarPoint> v;
  PlanarPoint p{0, 0};
  for (int i = 0; i < 8; ++i) {
    v.push_back(p);
    p += i < 4 ? sides[i] : -sides[i - 4];
  }
  return v;
}

bool simple_ccw(const std::vector<PlanarPoint>& v) {
  const int n = static_cast<int>(v.size());
  double area2 = 0.0;
  for (int i = 0; i < n; ++i) area2 += cross(v[i], v[(i + 1) % n]);
  if (area2 <= 0.0) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n], 1e-9)) return false;
    }
  return true;
}

// Turning angles between consecutive sides v1 -> v2 -> v3 -> v4 -> -v1 sum to
// π; concave corners are the negative turns (each appears twice, at i and i+4).
std::optional<std::array<Vec2, 4>> sample_sides(std::mt19937_64& rng, int concave_pairs) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::array<int, 4> order{0, 1, 2, 3};
  std::shuffle(order.begin(), order.end(), rng);
  std::array<double, 4> turn{};
  double negative = 0.0;
  for (int k = 0; k < concave_pairs; ++k) {
    turn[order[k]] = -(kMinTurn + u(rng) * (kPi / 2 - kMinTurn));
    negative -= turn[order[k]];
  }
  std::exponential_distribution<double> ex(1.0);
  double weight = 0.0;
  std::array<double, 4> w{};
  for (int k = concave_pairs; k < 4; ++k) weight += (w[order[k]] = ex(rng));
  for (int k = concave_pairs; k < 4; ++k) {
    turn[order[k]] = w[order[k]] / weight * (kPi + negative);
    if (turn[order[k]] < kMinTurn || turn[order[k]] > kPi - kMinTurn) return std::nullopt;
  }
  std::array<Vec2, 4> sides{};
  double theta = u(rng) * kTwoPi;
  for (int i = 0; i < 4; ++i) {
    const double len = kMinLength * std::pow(kMaxLength / kMinLength, u(rng));
    sides[i] = unit(theta) * len;
    theta += turn[i];
  }
  return sides;
}

SurfacePoint random_point(const Surface& s, std::mt19937_64& rng) {
  const auto& v = s.vertices(0);
  PlanarPoint lo = v[0], hi = v[0];
  for (const auto& p : v) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  std::uniform_real_distribution<double> ux(lo.x, hi.x), uy(lo.y, hi.y);
  for (;;) {
    const PlanarPoint p{ux(rng), uy(rng)};
    if (s.contains(0, p)) return SurfacePoint::at(0, p);
  }
}

// Shortest straight paths from `from` to `to`, at least `count` of them when
// they exist within a generous reach.
std::vector<PathHit> nearest(const Surface& s, const SurfacePoint& from, const SurfacePoint& to,
                             size_t count) {
  double reach = s.min_edge();
  double diameter = 0.0;
  for (const auto& a : s.vertices(0))
    for (const auto& b : s.vertices(0)) diameter = std::max(diameter, distance(a, b));
  for (;;) {
    DevelopmentOptions opt;
    opt.reach = reach;
    Development dev(s, from, opt);
    auto hits = dev.paths_to(to, reach);
    if (hits.size() >= count || reach > 4 * diameter) {
      std::sort(hits.begin(), hits.end(),
                [](const PathHit& a, const PathHit& b) { return a.length < b.length; });
      return hits;
    }
    reach *= 1.6;
  }
}

std::optional<PlanarPoint> circumcenter(PlanarPoint a, PlanarPoint b, PlanarPoint c) {
  const double d = 2.0 * cross(b - a, c - a);
  if (std::abs(d) < 1e-12) return std::nullopt;
  const Vec2 ab = b - a, ac = c - a;
  const double nb = dot(ab, ab), nc = dot(ac, ac);
  return a + Vec2{(ac.y * nb - ab.y * nc) / d, (ab.x * nc - ac.x * nb) / d};
}

// Moves a regular point to be equidistant from the developed images of its
// three nearest connections to `target`. Falls back to the original point.
SurfacePoint polish(const Surface& s, const SurfacePoint& p, const SurfacePoint& target) {
  const auto hits = nearest(s, p, target, 3);
  if (hits.size() < 3) return p;
  PlanarPoint img[3];
  for (int i = 0; i < 3; ++i) img[i] = p.position + unit(hits[i].direction) * hits[i].length;
  const auto c = circumcenter(img[0], img[1], img[2]);
  if (!c || distance(*c, p.position) > hits[2].length) return p;
  const auto moved = s.move(p, *c - p.position);
  return moved ? *moved : p;
}

int singular_id(const Surface& s) {
  for (const auto& cp : s.analysis().cone_points)
    if (cp.singular()) return cp.id;
  throw InternalConsistencyError("octagon without a cone point");
}

std::optional<std::vector<SurfaceCircle>> circles_for(const Surface& s, CircleStrategy strategy,
                                                      std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const SurfacePoint cone = SurfacePoint::at_cone(singular_id(s));
  switch (strategy) {
    case CircleStrategy::one_cone_circle: {
      const auto loops = nearest(s, cone, cone, 1);
      if (loops.empty()) return std::nullopt;
      return std::vector<SurfaceCircle>{{0, cone, loops[0].length / 2}};
    }
    case CircleStrategy::cone_plus_regular: {
      const auto loops = nearest(s, cone, cone, 1);
      if (loops.empty()) return std::nullopt;
      const double r1 = loops[0].length / 2 * (u(rng) < 0.5 ? 1.0 : 0.5 + 0.5 * u(rng));
      const SurfacePoint p = polish(s, random_point(s, rng), cone);
      if (p.is_cone_point()) return std::nullopt;
      const auto to_cone = nearest(s, p, cone, 1);
      if (to_cone.empty() || to_cone[0].length - r1 <= 1e-6) return std::nullopt;
      return std::vector<SurfaceCircle>{{0, cone, r1}, {1, p, to_cone[0].length - r1}};
    }
    case CircleStrategy::two_circles: {
      const SurfacePoint a = random_point(s, rng);
      const auto a_cone = nearest(s, a, cone, 1);
      const auto a_loop = nearest(s, a, a, 1);
      if (a_cone.empty() || a_loop.empty()) return std::nullopt;
      const double ra = (0.3 + 0.7 * u(rng)) * std::min(a_cone[0].length, a_loop[0].length / 2);
      const SurfacePoint b = polish(s, random_point(s, rng), a);
      const auto b_a = nearest(s, b, a, 1);
      if (b_a.empty() || b_a[0].length - ra <= 1e-6) return std::nullopt;
      return std::vector<SurfaceCircle>{{0, a, ra}, {1, b, b_a[0].length - ra}};
    }
  }
  return std::nullopt;
}

enum class Outcome { discarded, rejected, accepted };

struct TrialResult {
  Outcome outcome = Outcome::discarded;
  SearchSample sample;
};

std::optional<GraphStats> evaluate(const Packing& packing, double tol) {
  try {
    if (!check_packing(packing, tol).ok) return std::nullopt;
    return graph_stats(build_graph(packing, find_tangencies(packing, tol)));
  } catch (const RadiusTooLargeError&) {
    return std::nullopt;
  } catch (const InadmissibleCircleError&) {
    return std::nullopt;
  }
}

TrialResult run_trial(int trial, std::uint64_t seed, CircleStrategy strategy, double tol) {
  TrialResult out;
  out.sample.trial = trial;
  out.sample.source = "random";
  std::mt19937_64 rng(stream_seed(seed, static_cast<std::uint64_t>(trial)));
  const int concave_pairs = std::uniform_int_distribution<int>(0, 2)(rng);
  const auto sides = sample_sides(rng, concave_pairs);
  if (!sides) return out;
  out.sample.sides = *sides;
  const auto vertices = octagon_vertices(*sides);
  if (!simple_ccw(vertices)) return out;
  std::shared_ptr<const Surface> surface;
  try {
    surface = std::make_shared<const Surface>(octagon_surface(*sides), tol);
  } catch (const Error&) {
    return out;
  }
  if (surface->analysis().stratum != std::vector<int>{2}) return out;
  out.sample.concavities = concavities(*sides);
  out.outcome = Outcome::rejected;
  std::optional<std::vector<SurfaceCircle>> circles;
  try {
    circles = circles_for(*surface, strategy, rng);
  } catch (const RadiusTooLargeError&) {
  }
  if (!circles) return out;
  Packing packing{surface, *circles};
  for (auto& c : packing.circles) c.center = surface->canonicalize(c.center);
  const auto stats = evaluate(packing, tol);
  if (!stats) return out;
  out.outcome = Outcome::accepted;
  out.sample.packing = std::move(packing);
  out.sample.stats = *stats;
  return out;
}

std::array<Vec2, 4> sides_of(const Surface& s) {
  std::array<Vec2, 4> sides{};
  for (int i = 0; i < 4; ++i) sides[i] = s.vertex(0, i + 1) - s.vertex(0, i);
  return sides;
}

}  // namespace

SurfaceSpec octagon_surface(const std::array<Vec2, 4>& sides) {
  SurfaceSpec s;
  s.polygons.push_back({octagon_vertices(sides)});
  for (int i = 0; i < 4; ++i) s.pairings.push_back({{0, i}, {0, i + 4}});
  return s;
}

int concavities(const std::array<Vec2, 4>& sides) {
  int n = 0;
  for (int i = 0; i < 4; ++i) {
    const Vec2 next = i < 3 ? sides[i + 1] : -sides[0];
    if (cross(sides[i], next) < 0.0) n += 2;
  }
  return n;
}

std::string to_string(CircleStrategy s) {
  switch (s) {
    case CircleStrategy::one_cone_circle: return "one_cone_circle";
    case CircleStrategy::two_circles: return "two_circles";
    case CircleStrategy::cone_plus_regular: return "cone_plus_regular";
  }
  return "?";
}

CircleStrategy strategy_from_string(const std::string& name) {
  for (auto s : {CircleStrategy::one_cone_circle, CircleStrategy::two_circles,
                 CircleStrategy::cone_plus_regular})
    if (to_string(s) == name) return s;
  throw DomainError("unknown circle strategy: " + name);
}

SearchReport run_search(int trials, std::uint64_t seed, CircleStrategy strategy,
                        const SearchOptions& options) {
  if (trials <= 0) throw DomainError("trials must be positive");
  std::vector<TrialResult> results(static_cast<size_t>(trials));
  parallel_for(trials, options.threads, [&](int i) {
    results[static_cast<size_t>(i)] = run_trial(i, seed, strategy, options.tol);
  });

  if (options.inject_extremal) {
    const std::pair<const char*, Packing> forced[] = {
        {"edges-min", gen_multiedges_minimal_stratum(2, 0.3)},
        {"nine-loops", nine_loop_octagon()},
    };
    int index = -1;
    for (const auto& [name, packing] : forced) {
      TrialResult r;
      r.sample.trial = index--;
      r.sample.source = name;
      r.sample.sides = sides_of(*packing.surface);
      r.sample.concavities = concavities(r.sample.sides);
      r.sample.packing = packing;
      if (const auto stats = evaluate(packing, options.tol)) {
        r.outcome = Outcome::accepted;
        r.sample.stats = *stats;
      } else {
        r.outcome = Outcome::rejected;
      }
      results.push_back(std::move(r));
    }
  }

  SearchReport report;
  report.trials = trials;
  report.seed = seed;
  report.strategy = strategy;
  report.injected = options.inject_extremal ? 2 : 0;
  for (auto& r : results) {
    if (r.outcome == Outcome::discarded) {
      ++report.discarded;
      continue;
    }
    if (r.outcome == Outcome::rejected) {
      ++report.rejected;
      continue;
    }
    ++report.accepted;
    ++report.by_concavities[static_cast<size_t>(r.sample.concavities / 2)];
    if (r.sample.stats.max_multiedges > report.max_multiedges_found) {
      report.max_multiedges_found = r.sample.stats.max_multiedges;
      report.argmax_multiedges = r.sample;
    }
    if (r.sample.stats.max_loops > report.max_multiloops_found) {
      report.max_multiloops_found = r.sample.stats.max_loops;
      report.argmax_multiloops = r.sample;
    }
  }
  return report;
}

}  // namespace tsurf
