#include "doctest.h"

#include <cmath>

#include "honeycomb/hexgrid.hpp"

using namespace honeycomb;

TEST_CASE("tiling cells have unit area and tile without overlap") {
    const ConvexPolygon h00 = hex_polygon({0, 0});
    CHECK(h00.area() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(measure(h00).n_sides == 6);
    for (const HexIndex& n : hex_neighbors({0, 0})) {
        const ConvexPolygon hn = hex_polygon(n);
        CHECK(clip_area(h00, hn) == doctest::Approx(0.0));
        // neighbors share an edge: distance between centers is sqrt(3) s
        CHECK(dist(hex_center(n), hex_center({0, 0})) ==
              doctest::Approx(std::sqrt(3.0) * hex_side()).epsilon(1e-12));
    }
}

TEST_CASE("k-triangle sizes and connectivity") {
    CHECK(build_k_triangle(1).size() == 1);
    CHECK(build_k_triangle(3).size() == 6);
    CHECK(build_k_triangle(5).size() == 15);
    CHECK(build_k_triangle(3).connected());
    CHECK(build_k_triangle(5).connected());
    CHECK_THROWS_AS(build_k_triangle(0), InvalidArgument);
}

TEST_CASE("packing radii on the tiling-aligned hexagon") {
    const ConvexPolygon h00 = hex_polygon({0, 0});
    const PackingRadii r = packing_radii(h00, 1);
    CHECK(r.rho_int == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(r.rho_ext == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(count_interior_hexes(h00, r.rho_int) >= 1);
}

TEST_CASE("packing radii sharpness and monotonicity") {
    const ConvexPolygon sq({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    double prev = 0.0;
    for (int k : {1, 2, 5, 9, 20}) {
        const PackingRadii r = packing_radii(sq, k);
        CHECK(count_interior_hexes(sq, r.rho_int) >= k);
        CHECK(count_interior_hexes(sq, r.rho_int * (1.0 - 1e-6)) < k);
        CHECK(r.rho_int >= prev - 1e-12);
        prev = r.rho_int;
    }
}

TEST_CASE("inner hex structure of the unit square") {
    const ConvexPolygon sq({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    const int k = 100;
    const PackingRadii r = packing_radii(sq, k);
    const HexStructure inner = inner_hex_structure(sq, k, r.rho_int);
    CHECK(inner.size() == 100);
    CHECK(inner.connected());
    const ConvexPolygon region = sq.scaled(r.rho_int);
    for (const HexIndex& c : inner.cells) {
        const ConvexPolygon cell = hex_polygon(c);
        for (const Point2& v : cell.vertices())
            CHECK(region.contains(v, 1e-9 * region.diameter()));
    }
}

TEST_CASE("inner hex structure of the tiling-aligned hexagon is itself") {
    const ConvexPolygon h00 = hex_polygon({0, 0});
    const HexStructure inner = inner_hex_structure(h00, 1);
    REQUIRE(inner.size() == 1);
    CHECK(inner.cells.count({0, 0}) == 1);
}

TEST_CASE("convex envelope contains the structure") {
    const HexStructure tri = build_k_triangle(5);
    const Envelope env = convex_envelope(tri);
    for (const HexIndex& c : tri.cells) {
        const ConvexPolygon cell = hex_polygon(c);
        for (const Point2& v : cell.vertices())
            CHECK(env.hull.contains(v, 1e-9));
    }
    // crude side bound: C sqrt(k) with a small constant
    CHECK(env.n_sides <= 6.0 * std::sqrt(15.0));
}

TEST_CASE("empty structures are rejected") {
    CHECK_THROWS_AS(convex_envelope(HexStructure{}), InvalidArgument);
}

TEST_CASE("single-cell envelope is the hexagon") {
    HexStructure s;
    s.cells.insert({0, 0});
    const Envelope env = convex_envelope(s);
    CHECK(env.n_sides == 6);
    CHECK(env.hull.area() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("boundary loop of a k-triangle closes and bounds area k") {
    for (int l : {1, 2, 4}) {
        const HexStructure tri = build_k_triangle(l);
        const std::vector<Point2> loop = boundary_loop(tri);
        double twice = 0.0;
        for (std::size_t i = 0; i < loop.size(); ++i)
            twice += cross(loop[i], loop[(i + 1) % loop.size()]);
        CHECK(0.5 * twice == doctest::Approx(static_cast<double>(tri.size())).epsilon(1e-12));
    }
}

TEST_CASE("structure container accounts for the full notch area") {
    for (int l : {2, 3, 5}) {
        const HexStructure tri = build_k_triangle(l);
        const StructureContainer sc = structure_container(tri);
        double notch_area = 0.0;
        for (const ConvexPolygon& obs : sc.obstacles) notch_area += obs.area();
        CHECK(sc.hull.area() - notch_area ==
              doctest::Approx(static_cast<double>(tri.size())).epsilon(1e-10));
        // No obstacle may overlap a cell.
        for (const HexIndex& c : tri.cells)
            for (const ConvexPolygon& obs : sc.obstacles)
                CHECK(clip_area(hex_polygon(c), obs) <= 1e-9);
    }
}
