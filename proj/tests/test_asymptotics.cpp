#include "doctest.h"

#include <cmath>

#include "honeycomb/partition.hpp"

using namespace honeycomb;

namespace {

ConvexPolygon unit_square() {
    return ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

} // namespace

TEST_CASE("envelope of large inner structures fills the dilated container") {
    const ConvexPolygon sq = unit_square();
    const int k = 10000;
    const PackingRadii r = packing_radii(sq, k);
    const HexStructure inner = inner_hex_structure(sq, k, r.rho_int);
    const Envelope env = convex_envelope(inner);
    const double ratio = env.hull.area() / (r.rho_int * r.rho_int * sq.area());
    CHECK(ratio >= 0.9);
    CHECK(ratio <= 1.0 + 1e-9);
}

TEST_CASE("envelope side count stays below a constant multiple of sqrt(k)") {
    const ConvexPolygon sq = unit_square();
    for (int k : {100, 1000, 10000}) {
        const Envelope env = convex_envelope(inner_hex_structure(sq, k));
        const double ratio = env.n_sides / std::sqrt(static_cast<double>(k));
        INFO("k=", k, " sides=", env.n_sides);
        CHECK(ratio <= 6.0); // empirical constant for this container
    }
}

TEST_CASE("additive packing bound also lands within 5% at k = 10^4") {
    const BoundCertificate cert =
        hex_pack_bound(unit_square(), 10000, FunctionalKind::Cheeger, Objective::Sum);
    REQUIRE(cert.scaled_upper.has_value());
    const double ref = hexagon_reference(FunctionalKind::Cheeger);
    CHECK(std::abs(*cert.scaled_upper - ref) <= 0.05 * ref);
}

TEST_CASE("scaled packing bound is nonincreasing along k = 4^j") {
    const ConvexPolygon sq = unit_square();
    double prev = 1e300;
    for (int j = 2; j <= 6; ++j) {
        const int k = 1 << (2 * j);
        const BoundCertificate cert =
            hex_pack_bound(sq, k, FunctionalKind::Cheeger, Objective::Max);
        REQUIRE(cert.scaled_upper.has_value());
        CHECK(*cert.scaled_upper <= prev + 1e-3);
        prev = *cert.scaled_upper;
    }
}

TEST_CASE("optimize is deterministic for a fixed seed") {
    const ConvexPartitionResult a =
        optimize(unit_square(), 5, FunctionalKind::Perimeter, Objective::Sum, 11, 30);
    const ConvexPartitionResult b =
        optimize(unit_square(), 5, FunctionalKind::Perimeter, Objective::Sum, 11, 30);
    REQUIRE(a.cells.size() == b.cells.size());
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
        REQUIRE(a.cells[i].size() == b.cells[i].size());
        for (std::size_t v = 0; v < a.cells[i].size(); ++v) {
            CHECK(a.cells[i].vertex(v).x == b.cells[i].vertex(v).x);
            CHECK(a.cells[i].vertex(v).y == b.cells[i].vertex(v).y);
        }
    }
    CHECK(a.objective_sum == b.objective_sum);
}
