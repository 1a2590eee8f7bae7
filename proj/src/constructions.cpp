#include "tsurf/constructions.hpp"

#include <cmath>
#include <string>

#include "tsurf/errors.hpp"

namespace tsurf {

namespace {

SurfaceSpec single_polygon(std::vector<PlanarPoint> vertices) {
  SurfaceSpec s;
  const int n = static_cast<int>(vertices.size());
  s.polygons.push_back({std::move(vertices)});
  for (int i = 0; i < n / 2; ++i) s.pairings.push_back({{0, i}, {0, i + n / 2}});
  return s;
}

void require_genus(int g) {
  if (g < 2) throw DomainError("genus must be at least 2, got " + std::to_string(g));
}

int cone_point_at(const SurfaceSpec& spec, int vertex) {
  return Surface(spec).cone_point_of(0, vertex);
}

}  // namespace

SurfaceSpec torus_surface() { return single_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

SurfaceSpec three_square_surface() {
  SurfaceSpec s;
  s.polygons.push_back({{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}, {0, 1}}});
  s.pairings = {{{0, 2}, {0, 7}}, {{0, 3}, {0, 1}}, {{0, 4}, {0, 6}}, {{0, 5}, {0, 0}}};
  return s;
}

SurfaceSpec four_square_surface(double stretch) {
  if (!(stretch > 0.0)) throw DomainError("stretch must be positive");
  const double h = stretch;
  SurfaceSpec s;
  s.polygons.push_back({{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {3, h},
                         {2, h}, {1, h}, {1, 2 * h}, {0, 2 * h}, {0, h}}});
  s.pairings = {{{0, 0}, {0, 7}}, {{0, 1}, {0, 5}}, {{0, 2}, {0, 4}},
                {{0, 3}, {0, 9}}, {{0, 6}, {0, 8}}};
  return s;
}

SurfaceSpec regular_ngon_surface(int n, double side) {
  if (n < 4 || n % 2 != 0) throw DomainError("polygon size must be even and at least 4");
  if (!(side > 0.0)) throw DomainError("side must be positive");
  std::vector<PlanarPoint> v;
  PlanarPoint p{0, 0};
  for (int i = 0; i < n; ++i) {
    v.push_back(p);
    p += unit(kTwoPi * i / n) * side;
  }
  return single_polygon(std::move(v));
}

Packing c3_packing() {
  return make_packing(three_square_surface(), {{0, SurfacePoint::at(0, {0.5, 1.5}), 0.5},
                                               {1, SurfacePoint::at(0, {0.5, 0.5}), 0.5},
                                               {2, SurfacePoint::at(0, {1.5, 0.5}), 0.5}});
}

Packing c3_noncrossing_packing() {
  const PlanarPoint red{0.5, 1.25};
  const double rho = distance(red, {0.0, 1.0}) - 0.5;
  return make_packing(four_square_surface(1.0), {{0, SurfacePoint::at(0, red), 0.5},
                                                 {1, SurfacePoint::at_cone(0), rho},
                                                 {2, SurfacePoint::at(0, {2.75, 0.5}), 0.5}});
}

Packing gen_multiloops_minimal_stratum(int g, double side) {
  require_genus(g);
  const int m = 2 * g;
  std::vector<PlanarPoint> v;
  PlanarPoint p{0, 0};
  for (int i = 0; i < m; ++i) {
    const double dir = kTwoPi * i / m;
    v.push_back(p);
    v.push_back(p + unit(dir - kPi / 3) * side);
    p += unit(dir) * side;
  }
  SurfaceSpec spec = single_polygon(std::move(v));
  return make_packing(spec, {{0, SurfacePoint::at_cone(cone_point_at(spec, 0)), side / 2}});
}

Packing gen_multiedges_minimal_stratum(int g, double r, double side) {
  require_genus(g);
  const int n = 4 * g;
  const double circum = side / (2 * std::sin(kPi / n));
  const double apothem = side / (2 * std::tan(kPi / n));
  if (!(r > 0.0) || !(r < side / 2))
    throw DomainError("cone circle radius must lie in (0, side/2)");
  if (circum - r > apothem)
    throw DomainError("cone circle radius must be at least circumradius - apothem = " +
                      std::to_string(circum - apothem) + " so the central circle fits");
  SurfaceSpec spec = regular_ngon_surface(n, side);
  const PlanarPoint center{side / 2, apothem};
  return make_packing(spec, {{0, SurfacePoint::at_cone(cone_point_at(spec, 0)), r},
                             {1, SurfacePoint::at(0, center), circum - r}});
}

Packing gen_multiloops_principal_stratum(int g, double side) {
  require_genus(g);
  SurfaceSpec spec = regular_ngon_surface(4 * g + 2, side);
  const double radius = side * std::sin(g * kPi / (2 * g + 1));
  return make_packing(spec, {{0, SurfacePoint::at_cone(cone_point_at(spec, 0)), radius}});
}

Packing gen_multiedges_principal_stratum(int g, double side) {
  require_genus(g);
  const int m = 2 * g + 2;
  const double apothem = side / (2 * std::tan(kPi / m));
  const double circum = side / (2 * std::sin(kPi / m));
  const PlanarPoint c1{0, -apothem};
  std::vector<PlanarPoint> lower;
  for (int k = 0; k < m; ++k) lower.push_back(c1 + unit(kPi / 2 + kPi / m + kTwoPi * k / m) * circum);
  lower.front() = {-side / 2, 0};
  lower.back() = {side / 2, 0};
  std::vector<PlanarPoint> v = lower;
  for (int k = 1; k + 1 < m; ++k) v.push_back(-lower[k]);
  return make_packing(single_polygon(std::move(v)),
                      {{0, SurfacePoint::at(0, c1), apothem},
                       {1, SurfacePoint::at(0, -c1), apothem}});
}

Packing nine_loop_octagon() {
  const double s3 = std::sqrt(3.0);
  const PlanarPoint rhombus[4] = {{1, -s3}, {2, 0}, {1, s3}, {0, 0}};
  std::vector<PlanarPoint> v;
  for (int i = 0; i < 4; ++i) {
    const PlanarPoint a = rhombus[i];
    const PlanarPoint b = rhombus[(i + 1) % 4];
    const Vec2 d = b - a;
    // apex of the equilateral triangle on the outer (right-hand) side
    const PlanarPoint apex = a + d * 0.5 + Vec2{d.y, -d.x} * (s3 / 2);
    v.push_back(a);
    v.push_back(apex);
  }
  SurfaceSpec spec = single_polygon(std::move(v));
  return make_packing(spec, {{0, SurfacePoint::at_cone(cone_point_at(spec, 0)), 1.0}});
}

}  // namespace tsurf
