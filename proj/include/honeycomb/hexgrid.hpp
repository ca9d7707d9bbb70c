#pragma once

#include <set>
#include <vector>

#include "honeycomb/geometry.hpp"

namespace honeycomb {

// Axial coordinates on the fixed tiling of the plane by unit-area
// regular hexagons. Pointy-top layout, cell (0,0) centered at the origin.
struct HexIndex {
    int q = 0;
    int r = 0;

    auto operator<=>(const HexIndex&) const = default;
};

// Side length of the unit-area regular hexagon: (3*sqrt(3)/2) s^2 = 1.
double hex_side();

Point2 hex_center(HexIndex h);
ConvexPolygon hex_polygon(HexIndex h);
std::vector<HexIndex> hex_neighbors(HexIndex h);

enum class HexKind { KTriangle, Inner, Free };

// A finite connected set of tiling cells.
struct HexStructure {
    std::set<HexIndex> cells;
    HexKind kind = HexKind::Free;
    int triangle_rows = 0; // l for KTriangle, else 0

    std::size_t size() const { return cells.size(); }
    bool connected() const;
};

// Triangular arrangement of rows 1, 2, ..., l; l(l+1)/2 cells total.
HexStructure build_k_triangle(int l);

struct PackingRadii {
    double rho_int = 0.0;
    double rho_ext = 0.0;
    int k = 0;
};

// Number of tiling hexagons strictly inside rho * Omega (vertex-wise
// containment with slack 1e-12 * diameter).
int count_interior_hexes(const ConvexPolygon& omega, double rho);

// Number of hexagons meeting the closed region rho * Omega.
int count_extended_hexes(const ConvexPolygon& omega, double rho);

// rho_int: smallest rho with count_interior >= k.
// rho_ext: largest rho with count_extended <= k.
// Both by bisection to 1e-9 relative.
PackingRadii packing_radii(const ConvexPolygon& omega, int k);

// The k hexagons inside rho_int * Omega that remain after removing
// boundary-touching cells in lexicographic (q, r) order.
HexStructure inner_hex_structure(const ConvexPolygon& omega, int k);
HexStructure inner_hex_structure(const ConvexPolygon& omega, int k, double rho_int);

struct Envelope {
    ConvexPolygon hull;
    int n_sides = 0;
};

// Convex hull of all cell vertices, side count after collinear merge.
Envelope convex_envelope(const HexStructure& s);

// Outer boundary of the union of cells as an ordered vertex loop
// (counterclockwise). Requires a connected, simply connected structure.
std::vector<Point2> boundary_loop(const HexStructure& s);

// Convex container for cluster experiments inside a structure: the hull
// plus the "notch" polygons between hull and structure boundary, split
// into triangles. A convex set avoiding every obstacle and inside the
// hull is exactly a convex subset of the union of cells.
struct StructureContainer {
    ConvexPolygon hull;
    std::vector<ConvexPolygon> obstacles;
};

StructureContainer structure_container(const HexStructure& s);

} // namespace honeycomb
