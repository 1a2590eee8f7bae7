#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "tsurf/errors.hpp"
#include "tsurf/unfold.hpp"

using namespace tsurf;

namespace {

SurfaceSpec torus() {
  return {{{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}}}, {{{0, 0}, {0, 2}}, {{0, 1}, {0, 3}}}};
}

SurfaceSpec tromino() {
  SurfaceSpec s;
  s.polygons.push_back({{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}, {0, 1}}});
  s.pairings = {{{0, 2}, {0, 7}}, {{0, 4}, {0, 6}}, {{0, 5}, {0, 0}}, {{0, 3}, {0, 1}}};
  return s;
}

SurfaceSpec regular(int n) {
  SurfaceSpec s;
  PolygonSpec poly;
  PlanarPoint p{0, 0};
  for (int i = 0; i < n; ++i) {
    poly.vertices.push_back(p);
    p += unit(kTwoPi * i / n);
  }
  s.polygons.push_back(poly);
  for (int i = 0; i < n / 2; ++i) s.pairings.push_back({{0, i}, {0, i + n / 2}});
  return s;
}

}  // namespace

TEST_CASE("validation reports mismatched pairings") {
  CHECK(validate_spec(torus()).ok);
  CHECK(validate_spec(tromino()).ok);
  SurfaceSpec bad = torus();
  bad.pairings = {{{0, 0}, {0, 3}}, {{0, 1}, {0, 2}}};
  const ValidationReport r = validate_spec(bad);
  CHECK_FALSE(r.ok);
  CHECK(r.violations.front().discrepancy > 0.5);
  SurfaceSpec malformed = torus();
  malformed.pairings[0].b.edge = 9;
  CHECK_THROWS_AS(validate_spec(malformed), StructuralError);
}

TEST_CASE("strata of basic examples") {
  const SurfaceAnalysis t = analyze(torus());
  CHECK(t.genus == 1);
  CHECK(t.stratum.empty());
  CHECK(t.cone_points.size() == 1);
  const SurfaceAnalysis l = analyze(tromino());
  CHECK(l.genus == 2);
  CHECK(l.stratum == std::vector<int>{2});
  CHECK(l.cone_points[0].cone_angle == doctest::Approx(6 * kPi));
  CHECK(analyze(regular(8)).stratum == std::vector<int>{2});
  CHECK(analyze(regular(10)).stratum == std::vector<int>{1, 1});
  CHECK(analyze(regular(4)).stratum.empty());
  CHECK(analyze(regular(6)).stratum.empty());
}

TEST_CASE("canonical points") {
  const Surface s(torus());
  const SurfacePoint a = s.canonicalize(SurfacePoint::at(0, {1.0, 0.5}));
  CHECK(a.polygon == 0);
  CHECK(a.position.x == doctest::Approx(0.0));
  CHECK(a.position.y == doctest::Approx(0.5));
  CHECK(s.canonicalize(SurfacePoint::at(0, {0, 0})).cone_point == 0);
  const SurfacePoint b = s.canonicalize(SurfacePoint::at(0, {0.3, 0.4}));
  CHECK(b.position == PlanarPoint{0.3, 0.4});
  CHECK_THROWS_AS(s.canonicalize(SurfacePoint::at(0, {2, 2})), DomainError);
  const Surface l(tromino());
  for (double y : {0.25, 0.5, 0.9}) {
    const SurfacePoint p = l.canonicalize(SurfacePoint::at(0, {2.0, y}));
    const SurfacePoint q = l.canonicalize(SurfacePoint::at(0, {0.0, y}));
    CHECK(p.position == q.position);
    const SurfacePoint again = l.canonicalize(p);
    CHECK(again.position == p.position);
  }
}

TEST_CASE("affine transform keeps the stratum") {
  const SurfaceSpec t = affine_transform(torus(), 2, 1);
  CHECK(t.polygons[0].vertices[2] == PlanarPoint{2, 1});
  CHECK(analyze(t).stratum.empty());
  CHECK(analyze(affine_transform(tromino(), 1, 4.0 / 3)).stratum == std::vector<int>{2});
  CHECK_THROWS_AS(affine_transform(torus(), 0, 1), DomainError);
}

TEST_CASE("random square-tiled surfaces agree on the Euler characteristic") {
  // Surface constructor throws if Gauss-Bonnet and V - E + F disagree.
  std::mt19937_64 rng(11);
  int built = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    std::vector<int> right(n), up(n);
    for (int i = 0; i < n; ++i) right[i] = up[i] = i;
    std::shuffle(right.begin(), right.end(), rng);
    std::shuffle(up.begin(), up.end(), rng);
    SurfaceSpec s;
    for (int i = 0; i < n; ++i) {
      const double x = 2.0 * i;
      s.polygons.push_back({{{x, 0}, {x + 1, 0}, {x + 1, 1}, {x, 1}}});
    }
    for (int i = 0; i < n; ++i) {
      s.pairings.push_back({{i, 1}, {right[i], 3}});
      s.pairings.push_back({{i, 2}, {up[i], 0}});
    }
    try {
      const Surface surf(s);
      const auto& a = surf.analysis();
      int orders = 0;
      for (const auto& cp : a.cone_points) orders += cp.order;
      CHECK(orders + a.euler_characteristic == 0);
      ++built;
    } catch (const InvalidSurfaceError&) {
      // disconnected tilings are rejected
    }
  }
  CHECK(built > 10);
}

TEST_CASE("straight paths on the torus") {
  const Surface s(torus());
  const Development dev(s, SurfacePoint::at(0, {0.5, 0.5}), {.reach = 1.0});
  const auto paths = dev.paths_to(SurfacePoint::at(0, {0.5, 0.5}), 1.0);
  CHECK(paths.size() == 4);
  const auto longer = dev.paths_to(SurfacePoint::at(0, {0.5, 0.5}), 1.5);
  CHECK(longer.size() == 8);
}

TEST_CASE("saddle connections of the tromino") {
  const Surface s(tromino());
  const Development dev(s, SurfacePoint::at_cone(0), {.reach = 1.0});
  CHECK(dev.total_angle() == doctest::Approx(6 * kPi));
  // 4 glued boundary edges and 2 interior unit segments, each leaving the
  // cone point in two directions, one per quarter turn of the 6π cone
  const auto loops = dev.paths_to(SurfacePoint::at_cone(0), 1.0);
  REQUIRE(loops.size() == 12);
  for (size_t i = 0; i < loops.size(); ++i) CHECK(loops[i].angle == doctest::Approx(i * kPi / 2));
  // center to cone point: 4 corners of each of three squares
  const Development from_a(s, SurfacePoint::at(0, {0.5, 0.5}), {.reach = 0.75});
  CHECK(from_a.paths_to(SurfacePoint::at_cone(0), 0.75).size() == 4);
}

TEST_CASE("development does not depend on frontier order") {
  const Surface s(tromino());
  const SurfacePoint c = SurfacePoint::at(0, {0.3, 0.6});
  const Development a(s, c, {.reach = 2.5});
  const Development b(s, c, {.reach = 2.5, .shuffle_seed = 5});
  CHECK(a.cones().size() == b.cones().size());
  const auto pa = a.paths_to(SurfacePoint::at_cone(0), 2.5);
  const auto pb = b.paths_to(SurfacePoint::at_cone(0), 2.5);
  REQUIRE(pa.size() == pb.size());
  for (size_t i = 0; i < pa.size(); ++i) CHECK(pa[i].length == doctest::Approx(pb[i].length));
}
