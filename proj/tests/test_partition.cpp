#include "doctest.h"

#include <cmath>
#include <random>

#include "honeycomb/partition.hpp"

using namespace honeycomb;

namespace {

ConvexPolygon unit_square() {
    return ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

ConvexCluster triangle_cluster(int l, double shrink, unsigned seed) {
    const HexStructure tri = build_k_triangle(l);
    const StructureContainer sc = structure_container(tri);
    ConvexCluster cluster(sc.hull);
    cluster.obstacles = sc.obstacles;
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(0.8, 1.2);
    for (const HexIndex& c : tri.cells) {
        const ConvexPolygon hex = hex_polygon(c);
        const Point2 ctr = hex.centroid();
        std::vector<Point2> v;
        const double f = shrink * (seed == 0 ? 1.0 : std::min(u(rng), 1.0));
        for (const Point2& p : hex.vertices())
            v.push_back(ctr + (p - ctr) * f);
        cluster.cells.emplace_back(std::move(v));
    }
    return cluster;
}

} // namespace

TEST_CASE("power partition basics") {
    const ConvexPolygon sq = unit_square();
    SUBCASE("single seed covers the container") {
        const Point2 seeds[] = {{0.4, 0.6}};
        const double w[] = {0.0};
        const ConvexPartitionResult r = power_partition(sq, seeds, w);
        REQUIRE(r.cells.size() == 1);
        CHECK(r.covers);
        CHECK(r.cells[0].area() == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("two symmetric seeds split at the bisector") {
        const Point2 seeds[] = {{0.25, 0.5}, {0.75, 0.5}};
        const double w[] = {0.0, 0.0};
        const ConvexPartitionResult r = power_partition(sq, seeds, w);
        REQUIRE(r.cells.size() == 2);
        CHECK(r.covers);
        CHECK(r.cells[0].area() == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(r.per_cell[0].n_sides == 4);
    }
    SUBCASE("dominated seed is dropped and reported") {
        const Point2 seeds[] = {{0.5, 0.5}, {0.6, 0.5}};
        const double w[] = {10.0, 0.0};
        const ConvexPartitionResult r = power_partition(sq, seeds, w);
        CHECK(r.dropped_cells == 1);
        CHECK(r.cells.size() == 1);
    }
}

TEST_CASE("seven hexagonal-lattice seeds make a hexagonal interior cell") {
    const ConvexPolygon big = regular_polygon(6, 60.0);
    std::vector<Point2> seeds{{0, 0}};
    const double d = 1.0;
    for (int i = 0; i < 6; ++i) {
        const double a = M_PI / 6.0 + i * M_PI / 3.0;
        seeds.push_back({d * std::cos(a), d * std::sin(a)});
    }
    const std::vector<double> w(7, 0.0);
    const ConvexPartitionResult r = power_partition(big, seeds, w);
    REQUIRE(r.cells.size() == 7);
    // the central cell is the Voronoi hexagon of the triangular lattice
    bool found = false;
    for (std::size_t i = 0; i < r.cells.size(); ++i) {
        if (r.cell_seed[i] == 0) {
            CHECK(r.per_cell[i].n_sides == 6);
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("random power partitions always pass the euler audit") {
    const ConvexPolygon hex = regular_polygon(6, 1.0);
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    std::uniform_int_distribution<int> kk(2, 30);
    for (int trial = 0; trial < 60; ++trial) {
        const int k = kk(rng);
        std::vector<Point2> seeds;
        std::vector<double> w;
        while (static_cast<int>(seeds.size()) < k) {
            const Point2 p{u(rng), u(rng)};
            if (hex.contains(p, -1e-3)) {
                seeds.push_back(p);
                w.push_back(0.0);
            }
        }
        const ConvexPartitionResult r = power_partition(hex, seeds, w);
        if (static_cast<int>(r.cells.size()) < 2) continue;
        const SideAudit audit = audit_sides_euler(r);
        INFO("k=", r.cells.size(), " mean=", audit.mean_sides, " bound=", audit.bound);
        CHECK(audit.pass);
    }
}

TEST_CASE("euler audit equality case: one square cell in a square") {
    ConvexPartitionResult r(unit_square());
    r.cells.push_back(unit_square());
    const SideAudit audit = audit_sides_euler(r);
    CHECK(audit.bound == doctest::Approx(4.0));
    CHECK(audit.mean_sides == doctest::Approx(4.0));
    CHECK(audit.pass);
}

TEST_CASE("euler audit: one hexagon cell in a hexagon") {
    ConvexPartitionResult r(regular_polygon(6, 1.0));
    r.cells.push_back(regular_polygon(6, 1.0));
    const SideAudit audit = audit_sides_euler(r);
    CHECK(audit.bound == doctest::Approx(6.0));
    CHECK(audit.pass);
}

TEST_CASE("optimize with a single cell returns the container") {
    const ConvexPartitionResult r =
        optimize(unit_square(), 1, FunctionalKind::Perimeter, Objective::Max, 1, 10);
    REQUIRE(r.cells.size() == 1);
    CHECK(r.objective_max == doctest::Approx(4.0));
}

TEST_CASE("optimize beats the explicit two-cell competitor") {
    // Half-square split: each cell is a 1 x 0.5 rectangle of perimeter 3.
    const ConvexPartitionResult r =
        optimize(unit_square(), 2, FunctionalKind::Perimeter, Objective::Max, 7, 120);
    REQUIRE(r.cells.size() == 2);
    CHECK(r.objective_max <= 3.0 + 1e-6);
}

TEST_CASE("optimize cheeger quadrisection competitor") {
    // Four half-size squares have h = 2 (2 + sqrt(pi)).
    const ConvexPartitionResult r =
        optimize(unit_square(), 4, FunctionalKind::Cheeger, Objective::Max, 3, 60);
    REQUIRE(r.cells.size() == 4);
    CHECK(r.objective_max <= 2.0 * (2.0 + std::sqrt(M_PI)) + 1e-6);
}

TEST_CASE("grow a small square to the whole container") {
    ConvexCluster cluster(unit_square());
    cluster.cells.push_back(
        ConvexPolygon({{0.4, 0.4}, {0.6, 0.4}, {0.6, 0.6}, {0.4, 0.6}}));
    const ConvexCluster grown = grow_to_max_area(cluster);
    CHECK(grown.cells[0].area() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("grow two squares into an exact two-cell partition") {
    ConvexCluster cluster(ConvexPolygon({{0, 0}, {2, 0}, {2, 1}, {0, 1}}));
    cluster.cells.push_back(
        ConvexPolygon({{0.2, 0.3}, {0.7, 0.3}, {0.7, 0.8}, {0.2, 0.8}}));
    cluster.cells.push_back(
        ConvexPolygon({{1.3, 0.2}, {1.8, 0.2}, {1.8, 0.7}, {1.3, 0.7}}));
    const ConvexCluster grown = grow_to_max_area(cluster);
    const double total = grown.cells[0].area() + grown.cells[1].area();
    CHECK(total == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(clip_area(grown.cells[0], grown.cells[1]) <= 1e-9);
}

TEST_CASE("tight hexagons in a k-triangle are a fixed point of growth") {
    ConvexCluster cluster = triangle_cluster(2, 1.0, 0);
    const std::vector<double> before = {cluster.cells[0].area(), cluster.cells[1].area(),
                                        cluster.cells[2].area()};
    const ConvexCluster grown = grow_to_max_area(cluster);
    for (std::size_t i = 0; i < grown.cells.size(); ++i)
        CHECK(grown.cells[i].area() == doctest::Approx(before[i]).epsilon(1e-6));
}

TEST_CASE("grown shrunk hexagons pass the triangle side audit") {
    for (unsigned seed : {1u, 2u, 3u}) {
        ConvexCluster cluster = triangle_cluster(3, 0.6, seed);
        const ConvexCluster grown = grow_to_max_area(cluster);
        const SideAudit audit = audit_sides_triangle(grown);
        INFO("seed=", seed, " mean=", audit.mean_sides);
        CHECK(audit.pass);
        // mean side count <= 6 forces the Holder bound up to k gamma(6)
        const BoundCertificate cert = holder_lower_bound(grown, FunctionalKind::Cheeger);
        REQUIRE(cert.lower.has_value());
        const double k = static_cast<double>(grown.cells.size());
        CHECK(*cert.lower >= k * cheeger_regular(6) * (1.0 - 1e-12));
    }
}

TEST_CASE("hex pack bound on the aligned hexagon with k = 1") {
    const ConvexPolygon h00 = hex_polygon({0, 0});
    const BoundCertificate cert =
        hex_pack_bound(h00, 1, FunctionalKind::Cheeger, Objective::Max);
    REQUIRE(cert.upper.has_value());
    CHECK(*cert.upper == doctest::Approx(cheeger_regular(6)).epsilon(1e-5));
    CHECK(*cert.scaled_upper == doctest::Approx(cheeger_regular(6)).epsilon(1e-5));
}

TEST_CASE("hex pack bound rejects increasing sums") {
    CHECK_THROWS_AS(
        hex_pack_bound(unit_square(), 4, FunctionalKind::Perimeter, Objective::Sum),
        Unsupported);
}

TEST_CASE("holder lower bound equals the hexagon sum on all-hexagon clusters") {
    for (int l : {2, 3}) {
        ConvexCluster cluster = triangle_cluster(l, 1.0, 0);
        const int k = static_cast<int>(cluster.cells.size());
        const BoundCertificate cert = holder_lower_bound(cluster, FunctionalKind::Cheeger);
        REQUIRE(cert.lower.has_value());
        CHECK(*cert.lower ==
              doctest::Approx(k * cheeger_regular(6)).epsilon(1e-12));
        CHECK(*cert.scaled_lower == doctest::Approx(cheeger_regular(6)).epsilon(1e-12));
        CHECK_FALSE(cert.conditional);
    }
}

TEST_CASE("holder lower bound on a single hexagon cell is gamma(6)") {
    ConvexCluster cluster = triangle_cluster(1, 1.0, 0);
    REQUIRE(cluster.cells.size() == 1);
    const BoundCertificate cert = holder_lower_bound(cluster, FunctionalKind::Cheeger);
    REQUIRE(cert.lower.has_value());
    CHECK(*cert.lower == doctest::Approx(cheeger_regular(6)).epsilon(1e-12));
}

TEST_CASE("power partition cells are contained and interior-disjoint") {
    const ConvexPolygon hex = regular_polygon(6, 1.0);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Point2> seeds;
        std::vector<double> w;
        while (seeds.size() < 9) {
            const Point2 p{u(rng), u(rng)};
            if (hex.contains(p, -1e-3)) {
                seeds.push_back(p);
                w.push_back(0.0);
            }
        }
        const ConvexPartitionResult r = power_partition(hex, seeds, w);
        const double slack = 1e-9 * hex.diameter();
        for (std::size_t i = 0; i < r.cells.size(); ++i) {
            for (const Point2& v : r.cells[i].vertices()) CHECK(hex.contains(v, slack));
            for (std::size_t j = i + 1; j < r.cells.size(); ++j)
                CHECK(clip_area(r.cells[i], r.cells[j]) <= 1e-9);
        }
    }
}

TEST_CASE("holder lower bound rejects increasing kinds") {
    ConvexCluster cluster = triangle_cluster(2, 1.0, 0);
    CHECK_THROWS_AS(holder_lower_bound(cluster, FunctionalKind::Perimeter), Unsupported);
}

TEST_CASE("cluster validation catches violations") {
    ConvexCluster bad(unit_square());
    bad.cells.push_back(ConvexPolygon({{0.2, 0.2}, {0.8, 0.2}, {0.8, 0.8}, {0.2, 0.8}}));
    bad.cells.push_back(ConvexPolygon({{0.5, 0.5}, {0.9, 0.5}, {0.9, 0.9}, {0.5, 0.9}}));
    CHECK_THROWS_AS(validate_cluster(bad), DegenerateGeometry);

    ConvexCluster outside(unit_square());
    outside.cells.push_back(ConvexPolygon({{0.5, 0.5}, {1.5, 0.5}, {1.5, 0.9}, {0.5, 0.9}}));
    CHECK_THROWS_AS(validate_cluster(outside), DegenerateGeometry);
}
