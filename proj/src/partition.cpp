#include "honeycomb/partition.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

namespace honeycomb {

void validate_cluster(const ConvexCluster& cluster) {
    const double slack = 1e-9 * cluster.container.diameter();
    for (std::size_t i = 0; i < cluster.cells.size(); ++i) {
        for (const Point2& v : cluster.cells[i].vertices())
            if (!cluster.container.contains(v, slack))
                throw DegenerateGeometry("cluster cell leaves the container");
        for (std::size_t j = i + 1; j < cluster.cells.size(); ++j)
            if (clip_area(cluster.cells[i], cluster.cells[j]) > 1e-9)
                throw DegenerateGeometry("cluster cells overlap");
        for (const ConvexPolygon& obs : cluster.obstacles)
            if (clip_area(cluster.cells[i], obs) > 1e-9)
                throw DegenerateGeometry("cluster cell overlaps an obstacle");
    }
}

double hexagon_reference(FunctionalKind kind) {
    switch (kind) {
        case FunctionalKind::Cheeger: return cheeger_regular(6);
        case FunctionalKind::LogCap: return logcap_regular(6);
        case FunctionalKind::Perimeter: return perimeter_regular(6);
        case FunctionalKind::Lambda1: {
            static const double v = lambda1_fem(regular_polygon(6, 1.0), 0.012).value;
            return v;
        }
    }
    throw InvalidArgument("unknown functional kind");
}

BoundCertificate hex_pack_bound(const ConvexPolygon& omega, int k, FunctionalKind kind,
                                Objective objective) {
    if (k < 1) throw InvalidArgument("hex pack bound needs k >= 1");
    const Direction dir = functional_direction(kind);
    if (objective == Objective::Sum && dir != Direction::Decreasing)
        throw Unsupported("additive objective needs a decreasing functional");

    const double alpha = functional_alpha(kind);
    const double fh = hexagon_reference(kind);
    const double area = omega.area();
    const PackingRadii radii = packing_radii(omega, k);

    BoundCertificate cert;
    cert.kind = kind;
    cert.k = k;

    if (dir == Direction::Decreasing) {
        // k unit hexagons inside rho_int * Omega; pulling them back into
        // Omega scales each value by rho_int^alpha.
        const HexStructure inner = inner_hex_structure(omega, k, radii.rho_int);
        if (static_cast<int>(inner.size()) != k)
            throw SolverFailure("inner structure does not have k cells");
        cert.rho = radii.rho_int;
        const double rho_a = std::pow(radii.rho_int, alpha);
        if (objective == Objective::Sum) {
            cert.upper = rho_a * static_cast<double>(k) * fh;
            cert.scaled_upper = std::pow(area, alpha / 2.0) /
                                std::pow(static_cast<double>(k), (alpha + 2.0) / 2.0) *
                                *cert.upper;
        } else {
            cert.upper = rho_a * fh;
            cert.scaled_upper = std::pow(area, alpha / 2.0) /
                                std::pow(static_cast<double>(k), alpha / 2.0) * *cert.upper;
        }
    } else {
        // Covering structure: at most k hexagons meet rho_ext * Omega.
        cert.rho = radii.rho_ext;
        cert.upper = std::pow(radii.rho_ext, -alpha) * fh;
        cert.scaled_upper = std::pow(static_cast<double>(k), alpha / 2.0) /
                            std::pow(area, alpha / 2.0) * *cert.upper;
    }
    return cert;
}

BoundCertificate holder_lower_bound(const ConvexCluster& cluster, FunctionalKind kind) {
    if (functional_direction(kind) != Direction::Decreasing)
        throw Unsupported("the Holder chain applies to decreasing functionals");
    if (cluster.cells.empty()) throw InvalidArgument("empty cluster");

    // The container (hull minus notch obstacles) must be a structure of
    // area k made of unit cells.
    const int k = static_cast<int>(cluster.cells.size());
    double structure_area = cluster.container.area();
    for (const ConvexPolygon& obs : cluster.obstacles) structure_area -= obs.area();
    if (std::abs(structure_area - static_cast<double>(k)) > 1e-6 * static_cast<double>(k))
        throw InvalidArgument("cluster container is not a k-triangle of area k");

    int n_max = 6;
    std::vector<int> sides;
    sides.reserve(cluster.cells.size());
    for (const ConvexPolygon& cell : cluster.cells) {
        sides.push_back(measure(cell).n_sides);
        n_max = std::max(n_max, sides.back());
    }
    const std::vector<GammaPoint> curve = gamma_curve(kind, n_max);

    const double alpha = functional_alpha(kind);
    const double p = 2.0 / (alpha + 2.0);
    double sum = 0.0;
    bool conditional = false;
    for (int n : sides) {
        const GammaPoint& g = curve[static_cast<std::size_t>(n - 3)];
        sum += std::pow(g.gamma, p);
        if (g.exactness != Exactness::Exact) conditional = true;
    }

    BoundCertificate cert;
    cert.kind = kind;
    cert.k = k;
    cert.conditional = conditional;
    cert.lower = std::pow(static_cast<double>(k), -alpha / 2.0) * std::pow(sum, 1.0 / p);
    // |Omega| = k for a k-triangle, so the additive scaling collapses to 1/k.
    cert.scaled_lower = *cert.lower / static_cast<double>(k);
    return cert;
}

ConvexPartitionResult power_partition(const ConvexPolygon& omega,
                                      std::span<const Point2> seeds,
                                      std::span<const double> weights) {
    if (seeds.empty()) throw InvalidArgument("power partition needs at least one seed");
    if (seeds.size() != weights.size())
        throw InvalidArgument("seeds and weights must have equal length");
    for (std::size_t i = 0; i < seeds.size(); ++i)
        for (std::size_t j = i + 1; j < seeds.size(); ++j)
            if (dist(seeds[i], seeds[j]) == 0.0)
                throw InvalidArgument("power partition seeds must be distinct");

    ConvexPartitionResult out(omega);
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        std::vector<HalfPlane> planes;
        planes.reserve(seeds.size() - 1);
        for (std::size_t j = 0; j < seeds.size(); ++j) {
            if (j == i) continue;
            // |x-s_i|^2 - w_i <= |x-s_j|^2 - w_j.
            const Point2 n = (seeds[i] - seeds[j]) * 2.0;
            const double c = dot(seeds[i], seeds[i]) - dot(seeds[j], seeds[j]) -
                             weights[i] + weights[j];
            planes.push_back({n, c});
        }
        auto cell = clip_halfplanes(omega, planes);
        if (!cell) {
            ++out.dropped_cells;
            continue;
        }
        out.cells.push_back(std::move(*cell));
        out.cell_seed.push_back(static_cast<int>(i));
    }
    if (out.cells.empty()) throw DegenerateGeometry("all power cells are empty");

    double cell_area = 0.0;
    out.per_cell.clear();
    for (const ConvexPolygon& cell : out.cells) {
        const Measure m = measure(cell);
        out.per_cell.push_back({0.0, m.n_sides, m.area});
        cell_area += m.area;
    }
    out.covers = std::abs(cell_area - omega.area()) <= 1e-6 * omega.area();
    return out;
}

void evaluate_partition(ConvexPartitionResult& partition, FunctionalKind kind) {
    partition.objective_sum = 0.0;
    partition.objective_max = 0.0;
    for (std::size_t i = 0; i < partition.cells.size(); ++i) {
        const double v = evaluate(kind, partition.cells[i]).value;
        partition.per_cell[i].value = v;
        partition.objective_sum += v;
        partition.objective_max = std::max(partition.objective_max, v);
    }
}

ConvexPartitionResult optimize(const ConvexPolygon& omega, int k, FunctionalKind kind,
                               Objective objective, unsigned rng_seed, int iterations) {
    if (k < 1) throw InvalidArgument("optimize needs k >= 1");

    if (k == 1) {
        ConvexPartitionResult out(omega);
        out.cells.push_back(omega);
        out.cell_seed.push_back(0);
        const Measure m = measure(omega);
        out.per_cell.push_back({0.0, m.n_sides, m.area});
        out.covers = true;
        evaluate_partition(out, kind);
        return out;
    }

    std::mt19937 rng(rng_seed);
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const Point2& p : omega.vertices()) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    std::uniform_real_distribution<double> ux(xmin, xmax), uy(ymin, ymax);
    auto random_interior = [&] {
        for (int tries = 0; tries < 10000; ++tries) {
            const Point2 p{ux(rng), uy(rng)};
            if (omega.boundary_dist(p) > 1e-6 * omega.diameter()) return p;
        }
        throw SolverFailure("could not sample a seed inside the container");
    };

    std::vector<Point2> seeds(static_cast<std::size_t>(k));
    std::vector<double> weights(static_cast<std::size_t>(k), 0.0);
    for (Point2& s : seeds) s = random_interior();

    const double area_scale = omega.area() / static_cast<double>(k);
    const double balance_sign =
        functional_direction(kind) == Direction::Decreasing ? 1.0 : -1.0;

    std::optional<ConvexPartitionResult> best;
    double best_obj = std::numeric_limits<double>::infinity();
    double last_obj = best_obj;

    for (int it = 0; it < std::max(iterations, 1); ++it) {
        ConvexPartitionResult part = power_partition(omega, seeds, weights);
        if (part.dropped_cells > 0) {
            // Re-seed dominated sites and retry this iterate once.
            for (std::size_t i = 0; i < seeds.size(); ++i) weights[i] *= 0.5;
            ConvexPartitionResult retry = power_partition(omega, seeds, weights);
            part = std::move(retry);
        }
        evaluate_partition(part, kind);
        const double obj =
            objective == Objective::Sum ? part.objective_sum : part.objective_max;
        last_obj = obj;
        if (obj < best_obj && part.dropped_cells == 0) {
            best_obj = obj;
            best.emplace(part);
        }

        // Centroid move plus multiplicative weight balancing: cells whose
        // value is above the mean get more (decreasing F) or less
        // (increasing F) power radius.
        double mean_v = 0.0;
        for (const CellStats& cs : part.per_cell) mean_v += cs.value;
        mean_v /= static_cast<double>(part.per_cell.size());
        for (std::size_t ci = 0; ci < part.cells.size(); ++ci) {
            const auto si = static_cast<std::size_t>(part.cell_seed[ci]);
            seeds[si] = part.cells[ci].centroid();
            const double rel = part.per_cell[ci].value / mean_v - 1.0;
            weights[si] += 0.3 * area_scale * balance_sign * rel;
        }
        double wmean = 0.0;
        for (double w : weights) wmean += w;
        wmean /= static_cast<double>(weights.size());
        for (double& w : weights) w -= wmean;
    }

    if (!best) {
        // Every iterate dropped a cell; fall back to the last partition.
        ConvexPartitionResult part = power_partition(omega, seeds, weights);
        evaluate_partition(part, kind);
        part.converged = false;
        return part;
    }
    best->converged = std::abs(last_obj - best_obj) <= 1e-2 * std::abs(best_obj);
    return *best;
}

namespace {

// Greedy outward push of one side: returns the new cell and the advance.
struct PushResult {
    std::vector<Point2> loop;
    double advance = 0.0;
};

PushResult push_side(const ConvexCluster& cluster, std::size_t cell_idx,
                     std::size_t side_idx) {
    const ConvexPolygon& cell = cluster.cells[cell_idx];
    const HalfPlane side = cell.edge_halfplane(side_idx);

    // Region available to the cell if this side were removed: container
    // clipped by every other side.
    std::vector<Point2> region = cluster.container.vertices();
    for (std::size_t e = 0; e < cell.size() && !region.empty(); ++e) {
        if (e == side_idx) continue;
        region = clip_halfplane(region, cell.edge_halfplane(e));
    }
    if (region.size() < 3) return {cell.vertices(), 0.0};

    // Cap: beyond the far end of the region the side no longer cuts.
    double min_nx = 1e300;
    for (const Point2& v : region) min_nx = std::min(min_nx, dot(side.normal, v));
    double delta = side.offset - min_nx;

    // Half-planes of the region loop, for clipping obstacles into it.
    // Clip chains leave near-duplicate vertices; degenerate edges would
    // produce garbage normals, and dropping them only enlarges the
    // overlap estimate, which is the safe direction.
    const double edge_eps = 1e-12 * cluster.container.diameter();
    std::vector<HalfPlane> region_planes;
    region_planes.reserve(region.size());
    for (std::size_t e = 0; e < region.size(); ++e) {
        const Point2 a = region[e];
        const Point2 b = region[(e + 1) % region.size()];
        const Point2 edge = b - a;
        const double len = norm(edge);
        if (len <= edge_eps) continue;
        const Point2 nrm{-edge.y / len, edge.x / len};
        region_planes.push_back({nrm, dot(nrm, a)});
    }

    // First contact with any other cell or obstacle inside the region.
    // Zero-area overlaps (corner or edge grazing) cannot be swept into,
    // because the expansion stays inside the region.
    auto limit_by = [&](const ConvexPolygon& other) {
        std::vector<Point2> overlap = other.vertices();
        for (const HalfPlane& hp : region_planes) {
            if (overlap.empty()) break;
            overlap = clip_halfplane(overlap, hp);
        }
        if (overlap.size() < 3) return;
        double twice = 0.0;
        for (std::size_t v = 0; v < overlap.size(); ++v)
            twice += cross(overlap[v], overlap[(v + 1) % overlap.size()]);
        if (0.5 * twice <= 1e-10) return;
        double far = -1e300;
        for (const Point2& v : overlap) far = std::max(far, dot(side.normal, v));
        delta = std::min(delta, side.offset - far);
    };
    for (std::size_t j = 0; j < cluster.cells.size(); ++j)
        if (j != cell_idx) limit_by(cluster.cells[j]);
    for (const ConvexPolygon& obs : cluster.obstacles) limit_by(obs);

    delta = std::max(delta, 0.0);
    if (delta <= 0.0) return {cell.vertices(), 0.0};

    HalfPlane pushed = side;
    pushed.offset -= delta;
    std::vector<Point2> next = clip_halfplane(region, pushed);
    if (next.size() < 3) return {cell.vertices(), 0.0};
    return {std::move(next), delta};
}

// Maximal straight sides of the polygon after collinear merge, as vertex
// index ranges [from, to] walking counterclockwise.
std::vector<std::pair<std::size_t, std::size_t>> merged_sides(const ConvexPolygon& poly) {
    const auto& v = poly.vertices();
    const std::size_t n = v.size();
    std::vector<std::size_t> corners;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 e1 = v[i] - v[(i + n - 1) % n];
        const Point2 e2 = v[(i + 1) % n] - v[i];
        if (std::abs(std::atan2(cross(e1, e2), dot(e1, e2))) > 1e-9) corners.push_back(i);
    }
    std::vector<std::pair<std::size_t, std::size_t>> sides;
    for (std::size_t c = 0; c < corners.size(); ++c)
        sides.emplace_back(corners[c], corners[(c + 1) % corners.size()]);
    return sides;
}

} // namespace

ConvexCluster grow_to_max_area(const ConvexCluster& cluster) {
    validate_cluster(cluster);
    ConvexCluster out = cluster;

    constexpr double kAdvanceTol = 1e-7;
    constexpr int kMaxRounds = 500;
    for (int round = 0; round < kMaxRounds; ++round) {
        double max_advance = 0.0;
        for (std::size_t i = 0; i < out.cells.size(); ++i) {
            for (std::size_t s = 0; s < out.cells[i].size(); ++s) {
                PushResult pr = push_side(out, i, s);
                if (pr.advance <= 0.0) continue;
                const double before = out.cells[i].area();
                ConvexPolygon grown(std::move(pr.loop), out.cells[i].tolerance());
                if (grown.area() < before - 1e-12 * before)
                    throw SolverFailure("cell growth decreased area");
                out.cells[i] = std::move(grown);
                max_advance = std::max(max_advance, pr.advance);
            }
        }
        if (max_advance <= kAdvanceTol) break;
    }
    validate_cluster(out);

    // Contact audit: every maximal side must touch another cell, an
    // obstacle, or the container boundary within 1e-6.
    constexpr double kTouchTol = 1e-6;
    for (std::size_t i = 0; i < out.cells.size(); ++i) {
        const auto& v = out.cells[i].vertices();
        for (const auto& [from, to] : merged_sides(out.cells[i])) {
            const Point2 a = v[from], b = v[to];
            double d = 1e300;
            const auto& cv = out.container.vertices();
            for (std::size_t e = 0; e < cv.size(); ++e)
                d = std::min(d, segment_dist(a, b, cv[e], cv[(e + 1) % cv.size()]));
            for (std::size_t j = 0; j < out.cells.size() && d > kTouchTol; ++j) {
                if (j == i) continue;
                const auto& ov = out.cells[j].vertices();
                for (std::size_t e = 0; e < ov.size(); ++e)
                    d = std::min(d, segment_dist(a, b, ov[e], ov[(e + 1) % ov.size()]));
            }
            for (const ConvexPolygon& obs : out.obstacles) {
                if (d <= kTouchTol) break;
                const auto& ov = obs.vertices();
                for (std::size_t e = 0; e < ov.size(); ++e)
                    d = std::min(d, segment_dist(a, b, ov[e], ov[(e + 1) % ov.size()]));
            }
            if (d > kTouchTol)
                throw GrowthIncomplete("cell " + std::to_string(i) + " side " +
                                       std::to_string(from) + " touches nothing");
        }
    }
    return out;
}

namespace {

SideAudit audit_against(std::span<const ConvexPolygon> cells, double bound) {
    SideAudit audit;
    audit.bound = bound;
    for (const ConvexPolygon& cell : cells) audit.n_sides.push_back(measure(cell).n_sides);
    double sum = 0.0;
    for (int n : audit.n_sides) sum += n;
    audit.mean_sides = sum / static_cast<double>(audit.n_sides.size());
    audit.pass = audit.mean_sides <= bound + 1e-9;
    return audit;
}

} // namespace

SideAudit audit_sides_euler(std::span<const ConvexPolygon> cells, int container_sides) {
    if (cells.empty()) throw InvalidArgument("side audit needs at least one cell");
    const double k = static_cast<double>(cells.size());
    return audit_against(cells, 6.0 + (static_cast<double>(container_sides) - 6.0) / k);
}

SideAudit audit_sides_euler(const ConvexPartitionResult& partition) {
    return audit_sides_euler(partition.cells, measure(partition.container).n_sides);
}

SideAudit audit_sides_triangle(const ConvexCluster& cluster) {
    if (cluster.cells.empty()) throw InvalidArgument("side audit needs at least one cell");
    return audit_against(cluster.cells, 6.0);
}

std::vector<ConvergenceRow> convergence_run(const ConvexPolygon& omega, FunctionalKind kind,
                                            Objective objective,
                                            std::span<const int> k_list) {
    for (std::size_t i = 1; i < k_list.size(); ++i)
        if (k_list[i] <= k_list[i - 1])
            throw InvalidArgument("convergence run needs increasing k values");
    const double ref = hexagon_reference(kind);
    std::vector<ConvergenceRow> rows;
    rows.reserve(k_list.size());
    for (int k : k_list) {
        const BoundCertificate cert = hex_pack_bound(omega, k, kind, objective);
        rows.push_back({k, cert.upper.value_or(0.0), cert.scaled_upper.value_or(0.0), ref});
    }
    return rows;
}

} // namespace honeycomb
