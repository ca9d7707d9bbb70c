#include "honeycomb/fem.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>

namespace honeycomb {

std::size_t TriMesh::n_interior() const {
    std::size_t n = 0;
    for (char b : on_boundary)
        if (!b) ++n;
    return n;
}

namespace {

// Deterministic jitter in [-0.5, 0.5) from integer lattice coordinates.
double hash_jitter(std::int64_t a, std::int64_t b) {
    std::uint64_t x = static_cast<std::uint64_t>(a) * 0x9E3779B97F4A7C15ull ^
                      static_cast<std::uint64_t>(b) * 0xBF58476D1CE4E5B9ull;
    x ^= x >> 31;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 29;
    return static_cast<double>(x >> 11) * 0x1.0p-53 - 0.5;
}

struct Tri {
    int v[3];
    Point2 cc;     // circumcenter
    double rr = 0; // squared circumradius
    bool alive = false;
};

Tri make_tri(int a, int b, int c, const std::vector<Point2>& pts) {
    Tri t{};
    t.v[0] = a;
    t.v[1] = b;
    t.v[2] = c;
    const Point2 A = pts[a], B = pts[b], C = pts[c];
    const double d = 2.0 * (A.x * (B.y - C.y) + B.x * (C.y - A.y) + C.x * (A.y - B.y));
    const double a2 = dot(A, A), b2 = dot(B, B), c2 = dot(C, C);
    t.cc.x = (a2 * (B.y - C.y) + b2 * (C.y - A.y) + c2 * (A.y - B.y)) / d;
    t.cc.y = (a2 * (C.x - B.x) + b2 * (A.x - C.x) + c2 * (B.x - A.x)) / d;
    const double dx = A.x - t.cc.x, dy = A.y - t.cc.y;
    t.rr = dx * dx + dy * dy;
    t.alive = true;
    return t;
}

std::vector<std::array<int, 3>> bowyer_watson(const std::vector<Point2>& input) {
    std::vector<Point2> pts = input;

    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const Point2& p : pts) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    const double span = std::max(xmax - xmin, ymax - ymin);
    const double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);
    const int s0 = static_cast<int>(pts.size());
    pts.push_back({cx - 40.0 * span, cy - 20.0 * span});
    pts.push_back({cx + 40.0 * span, cy - 20.0 * span});
    pts.push_back({cx, cy + 40.0 * span});

    std::vector<Tri> tris;
    tris.push_back(make_tri(s0, s0 + 1, s0 + 2, pts));

    std::vector<int> order(static_cast<std::size_t>(s0));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const double ka = pts[a].x + 1e-6 * pts[a].y;
        const double kb = pts[b].x + 1e-6 * pts[b].y;
        return ka < kb;
    });

    std::vector<int> bad;
    for (int pi : order) {
        const Point2 p = pts[pi];
        bad.clear();
        for (int ti = 0; ti < static_cast<int>(tris.size()); ++ti) {
            const Tri& t = tris[ti];
            if (!t.alive) continue;
            const double dx = p.x - t.cc.x, dy = p.y - t.cc.y;
            if (dx * dx + dy * dy < t.rr) bad.push_back(ti);
        }
        // Boundary edges of the cavity: edges used exactly once.
        std::vector<std::array<int, 2>> edges;
        for (int ti : bad) {
            const Tri& t = tris[ti];
            for (int e = 0; e < 3; ++e) {
                const int a = t.v[e], b = t.v[(e + 1) % 3];
                bool shared = false;
                for (std::size_t j = 0; j < edges.size(); ++j) {
                    if (edges[j][0] == b && edges[j][1] == a) {
                        edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(j));
                        shared = true;
                        break;
                    }
                }
                if (!shared) edges.push_back({a, b});
            }
            tris[ti].alive = false;
        }
        for (const auto& e : edges) tris.push_back(make_tri(e[0], e[1], pi, pts));
    }

    std::vector<std::array<int, 3>> out;
    for (const Tri& t : tris) {
        if (!t.alive) continue;
        if (t.v[0] >= s0 || t.v[1] >= s0 || t.v[2] >= s0) continue;
        out.push_back({t.v[0], t.v[1], t.v[2]});
    }
    return out;
}

} // namespace

TriMesh mesh_polygon(const ConvexPolygon& poly, double h) {
    if (!(h > 0.0)) throw InvalidArgument("mesh size must be positive");

    TriMesh mesh;
    const auto& pv = poly.vertices();

    // Boundary points, jittered along each edge to break cocircular ties.
    for (std::size_t i = 0; i < pv.size(); ++i) {
        const Point2 a = pv[i];
        const Point2 b = pv[(i + 1) % pv.size()];
        const int segs = std::max(1, static_cast<int>(std::ceil(dist(a, b) / h)));
        for (int j = 0; j < segs; ++j) {
            double t = static_cast<double>(j) / segs;
            if (j > 0) t += 0.05 * hash_jitter(static_cast<std::int64_t>(i), j) / segs;
            mesh.vertices.push_back(a + (b - a) * t);
            mesh.on_boundary.push_back(1);
        }
    }

    // Interior points on a jittered hexagonal lattice of spacing h.
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const Point2& p : pv) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    const double row_h = h * 0.8660254037844386;
    const std::int64_t r0 = static_cast<std::int64_t>(std::floor(ymin / row_h)) - 1;
    const std::int64_t r1 = static_cast<std::int64_t>(std::ceil(ymax / row_h)) + 1;
    for (std::int64_t r = r0; r <= r1; ++r) {
        const double y = static_cast<double>(r) * row_h;
        const double off = (r % 2 == 0) ? 0.0 : 0.5 * h;
        const std::int64_t c0 = static_cast<std::int64_t>(std::floor((xmin - off) / h)) - 1;
        const std::int64_t c1 = static_cast<std::int64_t>(std::ceil((xmax - off) / h)) + 1;
        for (std::int64_t c = c0; c <= c1; ++c) {
            Point2 p{static_cast<double>(c) * h + off, y};
            p.x += 0.08 * h * hash_jitter(c, r);
            p.y += 0.08 * h * hash_jitter(r, c);
            if (poly.boundary_dist(p) >= 0.55 * h) {
                mesh.vertices.push_back(p);
                mesh.on_boundary.push_back(0);
            }
        }
    }

    mesh.triangles = bowyer_watson(mesh.vertices);
    return mesh;
}

namespace {

// Compressed sparse rows, symmetric matrices stored in full.
struct Csr {
    std::vector<int> ptr, col;
    std::vector<double> val;
    int n = 0;

    void mul(const std::vector<double>& x, std::vector<double>& y) const {
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = ptr[i]; j < ptr[i + 1]; ++j) s += val[j] * x[col[j]];
            y[i] = s;
        }
    }
};

Csr to_csr(int n, const std::vector<std::vector<std::pair<int, double>>>& rows) {
    Csr m;
    m.n = n;
    m.ptr.assign(n + 1, 0);
    for (int i = 0; i < n; ++i) m.ptr[i + 1] = m.ptr[i] + static_cast<int>(rows[i].size());
    m.col.resize(m.ptr[n]);
    m.val.resize(m.ptr[n]);
    for (int i = 0; i < n; ++i) {
        int at = m.ptr[i];
        for (const auto& [c, v] : rows[i]) {
            m.col[at] = c;
            m.val[at] = v;
            ++at;
        }
    }
    return m;
}

// Reverse Cuthill-McKee ordering to keep the Cholesky profile small.
std::vector<int> rcm_order(int n, const std::vector<std::vector<int>>& adj) {
    std::vector<int> order;
    order.reserve(n);
    std::vector<char> seen(n, 0);
    std::vector<int> degree(n);
    for (int i = 0; i < n; ++i) degree[i] = static_cast<int>(adj[i].size());

    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        int root = start;
        for (int i = start; i < n; ++i)
            if (!seen[i] && degree[i] < degree[root]) root = i;
        std::deque<int> queue{root};
        seen[root] = 1;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            order.push_back(u);
            std::vector<int> nb;
            for (int v : adj[u])
                if (!seen[v]) nb.push_back(v);
            std::sort(nb.begin(), nb.end(),
                      [&](int a, int b) { return degree[a] < degree[b]; });
            for (int v : nb) {
                seen[v] = 1;
                queue.push_back(v);
            }
        }
    }
    std::reverse(order.begin(), order.end());
    return order;
}

// Skyline (profile) Cholesky of a symmetric positive definite matrix.
struct Skyline {
    int n = 0;
    std::vector<int> first; // first stored column of each row
    std::vector<int> start; // offset of row i in vals
    std::vector<double> vals;

    void factor_from(const Csr& k) {
        n = k.n;
        first.assign(n, 0);
        for (int i = 0; i < n; ++i) {
            int fc = i;
            for (int j = k.ptr[i]; j < k.ptr[i + 1]; ++j) fc = std::min(fc, k.col[j]);
            first[i] = fc;
        }
        start.assign(n + 1, 0);
        for (int i = 0; i < n; ++i) start[i + 1] = start[i] + (i - first[i] + 1);
        vals.assign(start[n], 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = k.ptr[i]; j < k.ptr[i + 1]; ++j)
                if (k.col[j] <= i) at(i, k.col[j]) = k.val[j];

        for (int i = 0; i < n; ++i) {
            for (int j = first[i]; j < i; ++j) {
                const int lo = std::max(first[i], first[j]);
                double s = at(i, j);
                for (int m = lo; m < j; ++m) s -= at(i, m) * at(j, m);
                at(i, j) = s / at(j, j);
            }
            double d = at(i, i);
            for (int m = first[i]; m < i; ++m) d -= at(i, m) * at(i, m);
            if (!(d > 0.0)) throw SolverFailure("stiffness matrix is not positive definite");
            at(i, i) = std::sqrt(d);
        }
    }

    double& at(int i, int j) { return vals[start[i] + (j - first[i])]; }
    double at(int i, int j) const { return vals[start[i] + (j - first[i])]; }

    void solve(std::vector<double>& b) const {
        for (int i = 0; i < n; ++i) {
            double s = b[i];
            for (int j = first[i]; j < i; ++j) s -= at(i, j) * b[j];
            b[i] = s / at(i, i);
        }
        for (int i = n - 1; i >= 0; --i) {
            b[i] /= at(i, i);
            const double bi = b[i];
            for (int j = first[i]; j < i; ++j) b[j] -= at(i, j) * bi;
        }
    }
};

} // namespace

EigenResult dirichlet_lambda1(const ConvexPolygon& poly, double h_target) {
    const TriMesh mesh = mesh_polygon(poly, h_target);
    if (mesh.triangles.size() < 200)
        throw SolverFailure("mesh too coarse: fewer than 200 triangles");

    const int nv = static_cast<int>(mesh.vertices.size());
    std::vector<int> dof(nv, -1);
    int n = 0;
    for (int i = 0; i < nv; ++i)
        if (!mesh.on_boundary[i]) dof[i] = n++;
    if (n == 0) throw SolverFailure("mesh has no interior vertices");

    // Adjacency of interior DOFs (for ordering), then assembly.
    std::vector<std::vector<int>> adj(n);
    for (const auto& t : mesh.triangles)
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                const int i = dof[t[a]], j = dof[t[b]];
                if (i >= 0 && j >= 0 && i != j) adj[i].push_back(j);
            }
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    const std::vector<int> order = rcm_order(n, adj);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[order[i]] = i;

    std::vector<std::vector<std::pair<int, double>>> krows(n), mrows(n);
    auto add = [](std::vector<std::pair<int, double>>& row, int c, double v) {
        for (auto& [cc, vv] : row)
            if (cc == c) {
                vv += v;
                return;
            }
        row.emplace_back(c, v);
    };

    for (const auto& t : mesh.triangles) {
        const Point2 p0 = mesh.vertices[t[0]];
        const Point2 p1 = mesh.vertices[t[1]];
        const Point2 p2 = mesh.vertices[t[2]];
        double area2 = cross(p1 - p0, p2 - p0);
        std::array<int, 3> vidx = t;
        if (area2 < 0.0) {
            std::swap(vidx[1], vidx[2]);
            area2 = -area2;
        }
        const double area = 0.5 * area2;
        if (area <= 0.0) continue;
        const Point2 q0 = mesh.vertices[vidx[0]];
        const Point2 q1 = mesh.vertices[vidx[1]];
        const Point2 q2 = mesh.vertices[vidx[2]];
        // Gradients of the barycentric basis functions.
        const Point2 g[3] = {{(q1.y - q2.y) / area2, (q2.x - q1.x) / area2},
                             {(q2.y - q0.y) / area2, (q0.x - q2.x) / area2},
                             {(q0.y - q1.y) / area2, (q1.x - q0.x) / area2}};
        for (int a = 0; a < 3; ++a) {
            const int ia = dof[vidx[a]];
            if (ia < 0) continue;
            for (int b = 0; b < 3; ++b) {
                const int ib = dof[vidx[b]];
                if (ib < 0) continue;
                add(krows[perm[ia]], perm[ib], area * dot(g[a], g[b]));
                add(mrows[perm[ia]], perm[ib], (a == b ? area / 6.0 : area / 12.0));
            }
        }
    }
    for (auto& row : krows)
        std::sort(row.begin(), row.end());
    for (auto& row : mrows)
        std::sort(row.begin(), row.end());

    const Csr k = to_csr(n, krows);
    const Csr m = to_csr(n, mrows);
    Skyline chol;
    chol.factor_from(k);

    // Inverse power iteration on K y = M x.
    std::vector<double> x(n, 1.0), y(n), mx(n);
    double lambda = 0.0;
    int iters = 0;
    for (; iters < 500; ++iters) {
        m.mul(x, mx);
        y = mx;
        chol.solve(y);
        // With K y = M x: y' K y = y' M x.
        double ymx = 0.0, ymy = 0.0;
        m.mul(y, x); // x temporarily holds M y
        for (int i = 0; i < n; ++i) {
            ymx += y[i] * mx[i];
            ymy += y[i] * x[i];
        }
        const double next = ymx / ymy;
        const double scale = 1.0 / std::sqrt(ymy);
        for (int i = 0; i < n; ++i) x[i] = y[i] * scale;
        if (iters > 0 && std::abs(next - lambda) <= 1e-10 * next) {
            lambda = next;
            ++iters;
            break;
        }
        lambda = next;
    }

    EigenResult out;
    out.lambda1 = lambda;
    out.mesh_h = h_target;
    out.n_vertices = nv;
    out.n_triangles = static_cast<int>(mesh.triangles.size());
    out.iterations = iters;
    return out;
}

} // namespace honeycomb
