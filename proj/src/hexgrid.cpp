#include "honeycomb/hexgrid.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

namespace honeycomb {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

// Axial neighbor step for edge i; edge i joins vertices at angles
// 30 + 60 i and 90 + 60 i degrees, so its outward normal points at
// 60 + 60 i degrees.
constexpr HexIndex kEdgeNeighbor[6] = {{0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}, {1, 0}};

// Vertex offsets from the center in half-lattice units: the vertex at
// angle 30 + 60 i is center + (sqrt(3)/2 s * da, 1/2 s * db).
constexpr int kVertDa[6] = {1, 0, -1, -1, 0, 1};
constexpr int kVertDb[6] = {1, 2, 1, -1, -2, -1};

// Exact integer key of vertex i of cell (q, r); shared vertices of
// adjacent cells get identical keys.
std::pair<int, int> vertex_key(HexIndex h, int i) {
    return {2 * h.q + h.r + kVertDa[i], 3 * h.r + kVertDb[i]};
}

Point2 key_point(std::pair<int, int> key) {
    const double s = hex_side();
    return {0.5 * kSqrt3 * s * key.first, 0.5 * s * key.second};
}

} // namespace

double hex_side() {
    static const double s = std::sqrt(2.0 / (3.0 * kSqrt3));
    return s;
}

Point2 hex_center(HexIndex h) {
    const double s = hex_side();
    return {kSqrt3 * s * (h.q + 0.5 * h.r), 1.5 * s * h.r};
}

ConvexPolygon hex_polygon(HexIndex h) {
    std::vector<Point2> v;
    v.reserve(6);
    for (int i = 0; i < 6; ++i) v.push_back(key_point(vertex_key(h, i)));
    return ConvexPolygon(std::move(v));
}

std::vector<HexIndex> hex_neighbors(HexIndex h) {
    std::vector<HexIndex> out;
    out.reserve(6);
    for (const HexIndex& d : kEdgeNeighbor) out.push_back({h.q + d.q, h.r + d.r});
    return out;
}

bool HexStructure::connected() const {
    if (cells.empty()) return false;
    std::set<HexIndex> seen;
    std::deque<HexIndex> queue{*cells.begin()};
    seen.insert(*cells.begin());
    while (!queue.empty()) {
        const HexIndex c = queue.front();
        queue.pop_front();
        for (const HexIndex& n : hex_neighbors(c)) {
            if (cells.count(n) && !seen.count(n)) {
                seen.insert(n);
                queue.push_back(n);
            }
        }
    }
    return seen.size() == cells.size();
}

HexStructure build_k_triangle(int l) {
    if (l < 1) throw InvalidArgument("k-triangle needs l >= 1");
    HexStructure s;
    s.kind = HexKind::KTriangle;
    s.triangle_rows = l;
    for (int r = 0; r < l; ++r)
        for (int q = 0; q <= r; ++q) s.cells.insert({q, r});
    return s;
}

namespace {

struct CandidateRange {
    int r_lo, r_hi;
    int q_lo(int r) const { return q_lo_base - (r + 1) / 2; }
    int q_hi(int r) const { return q_hi_base - r / 2 + 1; }
    int q_lo_base, q_hi_base;
};

// Axial index ranges covering the bounding box of the polygon inflated
// by one hexagon diameter.
CandidateRange candidate_range(const ConvexPolygon& poly) {
    const double s = hex_side();
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const Point2& p : poly.vertices()) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    CandidateRange cr{};
    cr.r_lo = static_cast<int>(std::floor((ymin - 2 * s) / (1.5 * s)));
    cr.r_hi = static_cast<int>(std::ceil((ymax + 2 * s) / (1.5 * s)));
    cr.q_lo_base = static_cast<int>(std::floor((xmin - 2 * s) / (kSqrt3 * s)));
    cr.q_hi_base = static_cast<int>(std::ceil((xmax + 2 * s) / (kSqrt3 * s)));
    return cr;
}

std::vector<HalfPlane> edge_planes(const ConvexPolygon& poly) {
    std::vector<HalfPlane> planes;
    planes.reserve(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) planes.push_back(poly.edge_halfplane(i));
    return planes;
}

// Min over hexagon vertices of the signed distance to the polygon
// boundary; for a contained hexagon this is the distance from the
// hexagon to the boundary (the distance field is concave).
double hex_margin(HexIndex h, const std::vector<HalfPlane>& planes) {
    double margin = 1e300;
    for (int i = 0; i < 6; ++i) {
        const Point2 v = key_point(vertex_key(h, i));
        for (const HalfPlane& hp : planes) margin = std::min(margin, hp.signed_dist(v));
    }
    return margin;
}

// Separating-axis test between a hexagon and a convex polygon.
bool hex_overlaps(HexIndex h, const ConvexPolygon& poly) {
    std::vector<Point2> hex;
    hex.reserve(6);
    for (int i = 0; i < 6; ++i) hex.push_back(key_point(vertex_key(h, i)));
    const auto& pv = poly.vertices();

    auto separated_by = [](std::span<const Point2> a, std::span<const Point2> b) {
        const std::size_t n = a.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point2 e = a[(i + 1) % n] - a[i];
            const Point2 nrm{-e.y, e.x}; // inward for CCW a
            double b_max = -1e300;
            for (const Point2& p : b) b_max = std::max(b_max, dot(nrm, p - a[i]));
            if (b_max < 0.0) return true;
        }
        return false;
    };
    return !separated_by(hex, pv) && !separated_by(pv, hex);
}

template <typename Pred>
int count_hexes(const ConvexPolygon& region, Pred&& pred) {
    const CandidateRange cr = candidate_range(region);
    int count = 0;
    for (int r = cr.r_lo; r <= cr.r_hi; ++r)
        for (int q = cr.q_lo(r); q <= cr.q_hi(r); ++q)
            if (pred(HexIndex{q, r})) ++count;
    return count;
}

} // namespace

int count_interior_hexes(const ConvexPolygon& omega, double rho) {
    const ConvexPolygon region = omega.scaled(rho);
    const std::vector<HalfPlane> planes = edge_planes(region);
    const double slack = 1e-12 * region.diameter();
    return count_hexes(region,
                       [&](HexIndex h) { return hex_margin(h, planes) >= slack; });
}

int count_extended_hexes(const ConvexPolygon& omega, double rho) {
    const ConvexPolygon region = omega.scaled(rho);
    return count_hexes(region, [&](HexIndex h) { return hex_overlaps(h, region); });
}

PackingRadii packing_radii(const ConvexPolygon& omega, int k) {
    if (k < 1) throw InvalidArgument("packing radii need k >= 1");
    PackingRadii out;
    out.k = k;

    // rho_int: count_interior is nondecreasing in rho.
    {
        double hi = std::sqrt((k + 1.0) / omega.area()) + 4.0 / std::sqrt(omega.area());
        while (count_interior_hexes(omega, hi) < k) hi *= 2.0;
        double lo = 1e-9 * hi;
        if (count_interior_hexes(omega, lo) >= k) throw SolverFailure("rho_int bracket failed");
        while (hi - lo > 1e-9 * hi) {
            const double mid = 0.5 * (lo + hi);
            (count_interior_hexes(omega, mid) >= k ? hi : lo) = mid;
        }
        out.rho_int = hi;
    }

    // rho_ext: count_extended is nondecreasing in rho.
    {
        double lo = 1e-9;
        if (count_extended_hexes(omega, lo) > k)
            throw SolverFailure("no dilation keeps at most k boundary hexagons");
        double hi = std::sqrt((k + 1.0) / omega.area()) + 4.0 / std::sqrt(omega.area());
        while (count_extended_hexes(omega, hi) <= k) hi *= 2.0;
        while (hi - lo > 1e-9 * hi) {
            const double mid = 0.5 * (lo + hi);
            (count_extended_hexes(omega, mid) <= k ? lo : hi) = mid;
        }
        out.rho_ext = lo;
    }
    return out;
}

HexStructure inner_hex_structure(const ConvexPolygon& omega, int k) {
    return inner_hex_structure(omega, k, packing_radii(omega, k).rho_int);
}

HexStructure inner_hex_structure(const ConvexPolygon& omega, int k, double rho_int) {
    if (k < 1) throw InvalidArgument("inner structure needs k >= 1");
    const ConvexPolygon region = omega.scaled(rho_int);
    const std::vector<HalfPlane> planes = edge_planes(region);
    const double slack = 1e-12 * region.diameter();
    const double touch_tol = 1e-6 * region.diameter();

    std::map<HexIndex, double> margin; // contained cells with their boundary distance
    const CandidateRange cr = candidate_range(region);
    for (int r = cr.r_lo; r <= cr.r_hi; ++r)
        for (int q = cr.q_lo(r); q <= cr.q_hi(r); ++q) {
            const HexIndex h{q, r};
            const double m = hex_margin(h, planes);
            if (m >= slack) margin.emplace(h, m);
        }

    if (static_cast<int>(margin.size()) < k)
        throw SolverFailure("rho_int does not admit k interior hexagons");

    // Remove boundary-touching cells in lexicographic (q, r) order until
    // k remain. Bisection of rho_int guarantees the touching set is large
    // enough: every cell that entered in the final bracket is within the
    // touch tolerance.
    HexStructure s;
    s.kind = HexKind::Inner;
    std::size_t to_remove = margin.size() - static_cast<std::size_t>(k);
    for (const auto& [cell, m] : margin) {
        if (to_remove > 0 && m <= touch_tol) {
            --to_remove;
            continue;
        }
        s.cells.insert(cell);
    }
    if (to_remove > 0)
        throw SolverFailure("not enough boundary-touching hexagons to remove");
    return s;
}

Envelope convex_envelope(const HexStructure& s) {
    if (s.cells.empty()) throw InvalidArgument("convex envelope of an empty structure");
    std::vector<Point2> pts;
    pts.reserve(6 * s.cells.size());
    for (const HexIndex& c : s.cells)
        for (int i = 0; i < 6; ++i) pts.push_back(key_point(vertex_key(c, i)));
    Envelope env{convex_hull(pts), 0};
    env.n_sides = measure(env.hull).n_sides;
    return env;
}

std::vector<Point2> boundary_loop(const HexStructure& s) {
    if (s.cells.empty()) throw InvalidArgument("boundary of an empty structure");

    // Directed boundary edges, keyed by exact start-vertex key. Interior
    // edges cancel between the two adjacent cells.
    std::map<std::pair<int, int>, std::pair<int, int>> next;
    for (const HexIndex& c : s.cells) {
        for (int i = 0; i < 6; ++i) {
            const HexIndex nb{c.q + kEdgeNeighbor[i].q, c.r + kEdgeNeighbor[i].r};
            if (s.cells.count(nb)) continue;
            const auto from = vertex_key(c, i);
            const auto to = vertex_key(c, (i + 1) % 6);
            if (!next.emplace(from, to).second)
                throw Error("structure boundary has a pinch vertex");
        }
    }
    if (next.empty()) throw Error("structure has no boundary edges");

    std::vector<Point2> loop;
    const auto start = next.begin()->first;
    auto cur = start;
    do {
        loop.push_back(key_point(cur));
        const auto it = next.find(cur);
        if (it == next.end()) throw Error("structure boundary is not a closed loop");
        cur = it->second;
        if (loop.size() > next.size()) throw Error("structure boundary walk did not close");
    } while (cur != start);
    if (loop.size() != next.size()) throw Error("structure boundary has more than one loop");
    return loop;
}

namespace {

// Ear clipping of a simple CCW polygon into triangles.
std::vector<std::array<Point2, 3>> triangulate_simple(std::vector<Point2> poly) {
    std::vector<std::array<Point2, 3>> tris;
    auto is_ear = [&](std::size_t i) {
        const std::size_t n = poly.size();
        const Point2 a = poly[(i + n - 1) % n], b = poly[i], c = poly[(i + 1) % n];
        if (cross(b - a, c - b) <= 0.0) return false;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || j == (i + n - 1) % n || j == (i + 1) % n) continue;
            const Point2 p = poly[j];
            if (cross(b - a, p - a) >= 0.0 && cross(c - b, p - b) >= 0.0 &&
                cross(a - c, p - c) >= 0.0)
                return false;
        }
        return true;
    };
    while (poly.size() > 3) {
        bool clipped = false;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            if (!is_ear(i)) continue;
            const std::size_t n = poly.size();
            tris.push_back({poly[(i + n - 1) % n], poly[i], poly[(i + 1) % n]});
            poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(i));
            clipped = true;
            break;
        }
        if (!clipped) throw Error("notch triangulation failed");
    }
    tris.push_back({poly[0], poly[1], poly[2]});
    return tris;
}

} // namespace

StructureContainer structure_container(const HexStructure& s) {
    const std::vector<Point2> loop = boundary_loop(s);
    ConvexPolygon hull = convex_hull(loop);
    const double eps = 1e-9 * hex_side();

    // Positions of the hull vertices along the boundary loop.
    std::vector<std::size_t> hull_pos;
    for (const Point2& hv : hull.vertices()) {
        bool found = false;
        for (std::size_t i = 0; i < loop.size(); ++i) {
            if (dist(loop[i], hv) <= eps) {
                hull_pos.push_back(i);
                found = true;
                break;
            }
        }
        if (!found) throw Error("hull vertex not on the structure boundary");
    }

    StructureContainer out{std::move(hull), {}};
    const std::size_t n = loop.size();
    const std::size_t m = hull_pos.size();
    for (std::size_t j = 0; j < m; ++j) {
        const std::size_t a = hull_pos[j];
        const std::size_t b = hull_pos[(j + 1) % m];
        const std::size_t steps = (b + n - a) % n;
        if (steps <= 1) continue; // hull edge coincides with one boundary edge

        // The boundary path between two hull vertices may touch the chord
        // at interior points (straight runs of tooth peaks); each maximal
        // sub-path strictly off the chord is its own notch polygon.
        const Point2 u = loop[a];
        const Point2 v = loop[(a + steps) % n];
        const Point2 chord = v - u;
        const double len = norm(chord);
        const Point2 nrm{-chord.y / len, chord.x / len};
        const double chord_eps = 1e-9 * hex_side();

        std::vector<Point2> path;
        for (std::size_t t = 0; t <= steps; ++t) path.push_back(loop[(a + t) % n]);

        std::size_t seg_start = 0;
        for (std::size_t t = 1; t < path.size(); ++t) {
            const bool on_chord = std::abs(dot(nrm, path[t] - u)) <= chord_eps;
            if (!on_chord) continue;
            if (t - seg_start > 1) {
                std::vector<Point2> gap(path.begin() + static_cast<std::ptrdiff_t>(seg_start),
                                        path.begin() + static_cast<std::ptrdiff_t>(t + 1));
                std::reverse(gap.begin(), gap.end()); // counterclockwise
                for (const auto& tri : triangulate_simple(gap)) {
                    const double twice = cross(tri[1] - tri[0], tri[2] - tri[0]);
                    if (twice <= 1e-12) continue; // degenerate sliver
                    out.obstacles.emplace_back(std::vector<Point2>{tri[0], tri[1], tri[2]});
                }
            }
            seg_start = t;
        }
    }
    return out;
}

} // namespace honeycomb
