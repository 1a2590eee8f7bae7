// Explicit surfaces and packings: small square-tiled surfaces, regular
// polygons, and the extremal multi-loop / multi-edge packings.
#pragma once

#include "tsurf/circle.hpp"

namespace tsurf {

/// Unit-square torus.
SurfaceSpec torus_surface();

/// Three unit squares in an L (one octagon), single cone point of angle 6π.
SurfaceSpec three_square_surface();

/// Three unit squares in a row with a fourth above the leftmost, stretched
/// vertically by `stretch`.
SurfaceSpec four_square_surface(double stretch = 1.0);

/// Regular n-gon (n even) with opposite sides paired.
SurfaceSpec regular_ngon_surface(int n, double side = 1.0);

/// Three radius-1/2 circles at the square centers of the L:
/// 0 = top square, 1 = corner square, 2 = right square.
Packing c3_packing();

/// Same contacts graph as c3_packing() on the unit four-square surface, but
/// the self-chords miss the mutual segments.
Packing c3_noncrossing_packing();

/// Regular 2g-gon with outward equilateral triangles; one circle of radius
/// side / 2 at the cone point: 4g loops.
Packing gen_multiloops_minimal_stratum(int g, double side = 1.0);

/// Regular 4g-gon, circle of radius r at the cone point and one at the
/// center: 4g parallel edges.
Packing gen_multiedges_minimal_stratum(int g, double r, double side = 1.0);

/// Regular (4g+2)-gon, one circle at the even-vertex cone point: 2g+1 loops.
Packing gen_multiloops_principal_stratum(int g, double side = 1.0);

/// Two regular (2g+2)-gons glued along an edge, with their incircles:
/// 2g+2 parallel edges.
Packing gen_multiedges_principal_stratum(int g, double side = 1.0);

/// Octagon around a rhombus of four unit circles, one circle at its cone
/// point: 9 loops.
Packing nine_loop_octagon();

}  // namespace tsurf
