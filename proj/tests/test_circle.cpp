#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tsurf/constructions.hpp"
#include "tsurf/errors.hpp"

using namespace tsurf;

namespace {

// First boundary crossing of the ray after t_min, by brute force over edges.
double polygon_exit(const Surface& s, int polygon, PlanarPoint o, Vec2 u, double t_min) {
  double best = kNoBlock;
  for (int e = 0; e < s.size(polygon); ++e) {
    const PlanarPoint a = s.vertex(polygon, e), b = s.vertex(polygon, e + 1);
    const Vec2 d = b - a;
    const double den = cross(u, d);
    if (std::abs(den) < 1e-15) continue;
    const double t = cross(a - o, d) / den;
    const double w = cross(a - o, u) / den;
    if (t > t_min + 1e-12 && w >= -1e-12 && w <= 1 + 1e-12) best = std::min(best, t);
  }
  return best;
}

// Area of the developed disk by midpoint quadrature over every piece.
double developed_area(const Surface& s, const SurfaceCircle& c) {
  double area = 0.0;
  for (const DiskPiece& p : develop_circle(s, c).pieces) {
    const int steps = 4000;
    const double h = p.sweep / steps;
    for (int k = 0; k < steps; ++k) {
      const double theta = p.start + (k + 0.5) * h;
      const Vec2 u = unit(theta);
      double near = 0.0;
      if (p.entry_edge >= 0) {
        const EdgeRef e{p.polygon, p.entry_edge};
        near = *ray_line(p.center, u, s.edge_start(e), s.edge_end(e));
      }
      const double far = std::min(p.radius, polygon_exit(s, p.polygon, p.center, u, near));
      if (far > near) area += 0.5 * (far * far - near * near) * h;
    }
  }
  return area;
}

}  // namespace

TEST_CASE("developed pieces tile the disk") {
  const Surface torus(torus_surface());
  const Surface tromino(three_square_surface());
  const Packing nine = nine_loop_octagon();
  const Packing loops3 = gen_multiloops_minimal_stratum(3);
  struct Case {
    const Surface* s;
    SurfaceCircle c;
    double cone_multiple;
  };
  const Case cases[] = {
      {&torus, {0, SurfacePoint::at(0, {0.3, 0.4}), 0.45}, 1},
      {&torus, {0, SurfacePoint::at(0, {0.05, 0.95}), 0.5}, 1},
      {&tromino, {0, SurfacePoint::at(0, {0.5, 0.5}), 0.5}, 1},
      {&tromino, {0, SurfacePoint::at(0, {1.2, 0.9}), 0.3}, 1},
      {&tromino, {0, SurfacePoint::at_cone(0), 0.5}, 3},
      {nine.surface.get(), nine.circles[0], 3},
      {loops3.surface.get(), loops3.circles[0], 5},
  };
  for (const auto& k : cases) {
    const double expected = k.cone_multiple * kPi * k.c.radius * k.c.radius;
    CHECK(developed_area(*k.s, k.c) == doctest::Approx(expected).epsilon(1e-5));
    CHECK(develop_circle(*k.s, k.c).multiplicity == static_cast<int>(k.cone_multiple));
  }
}

TEST_CASE("admissibility") {
  const Surface torus(torus_surface());
  CHECK(check_admissible(torus, {0, SurfacePoint::at(0, {0.5, 0.5}), 0.5}).ok);
  const CheckReport loop = check_admissible(torus, {0, SurfacePoint::at(0, {0.5, 0.5}), 0.6});
  CHECK_FALSE(loop.ok);
  CHECK(loop.witnesses.front().kind == "loop");
  CHECK(loop.witnesses.front().depth == doctest::Approx(0.2));

  const Surface tromino(three_square_surface());
  // distance to the cone point is sqrt(1/2)
  CHECK(check_admissible(tromino, {0, SurfacePoint::at(0, {0.5, 0.5}), 0.7}).ok);
  const CheckReport inside = check_admissible(tromino, {0, SurfacePoint::at(0, {0.5, 0.5}), 0.75});
  CHECK_FALSE(inside.ok);
  bool singular = false;
  for (const auto& w : inside.witnesses) singular |= w.kind == "singular-inside";
  CHECK(singular);
  // cone-centered: the shortest saddle connection has length 1
  CHECK(check_admissible(tromino, {0, SurfacePoint::at_cone(0), 0.5}).ok);
  CHECK_FALSE(check_admissible(tromino, {0, SurfacePoint::at_cone(0), 0.55}).ok);
}

TEST_CASE("packing checks") {
  CHECK(check_packing(c3_packing()).ok);
  CHECK(check_packing(c3_noncrossing_packing()).ok);
  Packing p = c3_packing();
  p.circles[1].radius = 0.6;
  const CheckReport r = check_packing(p);
  CHECK_FALSE(r.ok);
  bool pair = false;
  for (const auto& w : r.witnesses) pair |= w.kind == "pair";
  CHECK(pair);
  CHECK_THROWS_AS(make_packing(torus_surface(), {{0, SurfacePoint::at(0, {0.5, 0.5}), 0.0}}),
                  DomainError);
}

TEST_CASE("proximity on the torus") {
  const Surface torus(torus_surface());
  const std::vector<SurfaceCircle> one{{0, SurfacePoint::at(0, {0.5, 0.5}), 0.5}};
  const Proximity px = proximity(torus, one);
  CHECK(px.visits.empty());
  int tight = 0;
  for (const auto& l : px.links) {
    CHECK(l.a == 0);
    CHECK(l.b == 0);
    if (std::abs(l.gap) < 1e-9) ++tight;
  }
  // the four unit translations, each seen from both ends
  CHECK(tight >= 2);
  CHECK(tight <= 4);
}

TEST_CASE("development does not depend on frontier order") {
  const Packing nine = nine_loop_octagon();
  const auto base = develop_circle(*nine.surface, nine.circles[0]);
  for (std::uint64_t seed = 1; seed < 6; ++seed) {
    const auto shuffled = develop_circle(*nine.surface, nine.circles[0], seed);
    CHECK(shuffled.pieces.size() == base.pieces.size());
    double a = 0.0, b = 0.0;
    for (const auto& p : base.pieces) a += p.sweep;
    for (const auto& p : shuffled.pieces) b += p.sweep;
    CHECK(a == doctest::Approx(b));
  }
}
