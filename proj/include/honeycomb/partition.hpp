#pragma once

#include <optional>
#include <vector>

#include "honeycomb/functionals.hpp"
#include "honeycomb/geometry.hpp"
#include "honeycomb/hexgrid.hpp"

namespace honeycomb {

// k convex bodies inside a container with pairwise disjoint interiors;
// they need not cover the container.
struct ConvexCluster {
    explicit ConvexCluster(ConvexPolygon container_poly)
        : container(std::move(container_poly)) {}

    std::vector<ConvexPolygon> cells;
    ConvexPolygon container;
    // For structure containers: convex notch regions between the hull and
    // the structure boundary that cells must also avoid.
    std::vector<ConvexPolygon> obstacles;
};

// Throws if a cell leaves the container (tolerance 1e-9 * diameter) or
// two cells overlap with area above 1e-9.
void validate_cluster(const ConvexCluster& cluster);

struct CellStats {
    double value = 0.0;
    int n_sides = 0;
    double area = 0.0;
};

struct ConvexPartitionResult {
    explicit ConvexPartitionResult(ConvexPolygon container_poly)
        : container(std::move(container_poly)) {}

    std::vector<ConvexPolygon> cells;
    ConvexPolygon container;
    bool covers = false;
    std::vector<CellStats> per_cell;
    double objective_sum = 0.0;
    double objective_max = 0.0;
    std::vector<int> cell_seed; // originating seed of each cell
    int dropped_cells = 0;      // seeds whose power cell was empty
    bool converged = true;
};

enum class Objective { Sum, Max };

struct BoundCertificate {
    FunctionalKind kind = FunctionalKind::Cheeger;
    int k = 0;
    std::optional<double> upper;
    std::optional<double> lower;
    std::optional<double> scaled_upper;
    std::optional<double> scaled_lower;
    bool conditional = false; // a non-exact gamma entry was used
    double rho = 0.0;         // dilation radius behind the bound
};

// Packing upper bound from an inner (or covering) hexagonal structure:
//   decreasing, Sum: m_k <= rho_int^alpha k F(H)
//   decreasing, Max: M_k <= rho_int^alpha F(H)
//   increasing, Max: m_k <= rho_ext^{-alpha} F(H)
// Scaled values use |Omega|^{a/2} k^{-(a+2)/2}, |Omega|^{a/2} k^{-a/2},
// and k^{a/2} |Omega|^{-a/2} respectively.
BoundCertificate hex_pack_bound(const ConvexPolygon& omega, int k, FunctionalKind kind,
                                Objective objective);

// Reference value F(H) on the unit-area regular hexagon.
double hexagon_reference(FunctionalKind kind);

// Holder-chain lower bound for clusters in a k-triangle of area k:
//   sum F(E_i) >= k^{-alpha/2} (sum gamma(n_i)^{2/(alpha+2)})^{(alpha+2)/2}.
// Only decreasing kinds; marked conditional when a gamma entry is a bound.
BoundCertificate holder_lower_bound(const ConvexCluster& cluster, FunctionalKind kind);

// Power-diagram partition of the container. Cells are the container
// clipped by the dominance half-planes; empty cells are dropped and
// counted. Per-cell functional values start at zero; fill them with
// evaluate_partition.
ConvexPartitionResult power_partition(const ConvexPolygon& omega,
                                      std::span<const Point2> seeds,
                                      std::span<const double> weights);

// Evaluates F on every cell and refreshes the objective aggregates.
void evaluate_partition(ConvexPartitionResult& partition, FunctionalKind kind);

// Lloyd-style heuristic: alternate centroid moves with multiplicative
// weight balancing of the per-cell values; keeps the best iterate.
// Deterministic for a fixed rng_seed.
ConvexPartitionResult optimize(const ConvexPolygon& omega, int k, FunctionalKind kind,
                               Objective objective, unsigned rng_seed, int iterations);

// Greedy alternating expansion: every free side of every cell is pushed
// outward to first contact (another cell, an obstacle, or the container
// boundary). Stops when no side can advance by more than 1e-7. The
// returned cluster is audited: each side of each cell must touch
// something within 1e-6, else GrowthIncomplete is thrown.
ConvexCluster grow_to_max_area(const ConvexCluster& cluster);

struct SideAudit {
    double mean_sides = 0.0;
    double bound = 0.0;
    bool pass = false;
    std::vector<int> n_sides;
};

// Mean side count against 6 + (n_Q - 6)/k for a convex container with
// n_Q sides (partitions), or against 6 for clusters in k-triangles.
SideAudit audit_sides_euler(const ConvexPartitionResult& partition);
SideAudit audit_sides_euler(std::span<const ConvexPolygon> cells, int container_sides);
SideAudit audit_sides_triangle(const ConvexCluster& cluster);

struct ConvergenceRow {
    int k = 0;
    double upper = 0.0;
    double scaled_upper = 0.0;
    double reference = 0.0;
};

std::vector<ConvergenceRow> convergence_run(const ConvexPolygon& omega, FunctionalKind kind,
                                            Objective objective,
                                            std::span<const int> k_list);

} // namespace honeycomb
