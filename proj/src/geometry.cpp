#include "honeycomb/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace honeycomb {

double norm(Point2 a) { return std::hypot(a.x, a.y); }
double dist(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

namespace {

double loop_area(std::span<const Point2> v) {
    double twice = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point2 a = v[i];
        const Point2 b = v[(i + 1) % v.size()];
        twice += cross(a, b);
    }
    return 0.5 * twice;
}

double loop_diameter(std::span<const Point2> v) {
    double best = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            best = std::max(best, dist(v[i], v[j]));
    return best;
}

// Drop consecutive vertices closer than tol * diameter (wrap included).
std::vector<Point2> dedupe_loop(std::vector<Point2> v, double tol) {
    const double eps = tol * std::max(loop_diameter(v), 1e-300);
    std::vector<Point2> out;
    out.reserve(v.size());
    for (const Point2& p : v) {
        if (out.empty() || dist(out.back(), p) > eps) out.push_back(p);
    }
    while (out.size() > 1 && dist(out.front(), out.back()) <= eps) out.pop_back();
    return out;
}

} // namespace

ConvexPolygon::ConvexPolygon(std::vector<Point2> vertices, double tolerance)
    : verts_(dedupe_loop(std::move(vertices), tolerance)), tol_(tolerance) {
    if (tol_ < 0.0) throw InvalidArgument("polygon tolerance must be >= 0");
    if (verts_.size() < 3) throw DegenerateGeometry("polygon needs at least 3 distinct vertices");
    for (const Point2& p : verts_) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw DegenerateGeometry("polygon vertex is not finite");
    }
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 e1 = verts_[(i + 1) % n] - verts_[i];
        const Point2 e2 = verts_[(i + 2) % n] - verts_[(i + 1) % n];
        if (cross(e1, e2) < -tol_ * norm(e1) * norm(e2))
            throw DegenerateGeometry("vertices are not a counterclockwise convex loop");
    }
    const double a = loop_area(verts_);
    if (a <= tol_ * loop_diameter(verts_) * loop_diameter(verts_))
        throw DegenerateGeometry("polygon area is not positive");
}

double ConvexPolygon::area() const { return loop_area(verts_); }

double ConvexPolygon::perimeter() const {
    double p = 0.0;
    for (std::size_t i = 0; i < verts_.size(); ++i)
        p += dist(verts_[i], verts_[(i + 1) % verts_.size()]);
    return p;
}

double ConvexPolygon::diameter() const { return loop_diameter(verts_); }

Point2 ConvexPolygon::centroid() const {
    double twice = 0.0;
    Point2 c{0.0, 0.0};
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        const Point2 a = verts_[i];
        const Point2 b = verts_[(i + 1) % verts_.size()];
        const double w = cross(a, b);
        twice += w;
        c.x += (a.x + b.x) * w;
        c.y += (a.y + b.y) * w;
    }
    return {c.x / (3.0 * twice), c.y / (3.0 * twice)};
}

HalfPlane ConvexPolygon::edge_halfplane(std::size_t i) const {
    const Point2 a = verts_[i % verts_.size()];
    const Point2 b = verts_[(i + 1) % verts_.size()];
    const Point2 e = b - a;
    const double len = norm(e);
    const Point2 n{-e.y / len, e.x / len};
    return HalfPlane{n, dot(n, a)};
}

double ConvexPolygon::boundary_dist(Point2 p) const {
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < verts_.size(); ++i)
        d = std::min(d, edge_halfplane(i).signed_dist(p));
    return d;
}

bool ConvexPolygon::contains(Point2 p, double slack) const {
    return boundary_dist(p) >= -slack;
}

ConvexPolygon ConvexPolygon::scaled(double factor) const {
    if (factor <= 0.0) throw InvalidArgument("scale factor must be positive");
    std::vector<Point2> v = verts_;
    for (Point2& p : v) p = p * factor;
    return ConvexPolygon(std::move(v), tol_);
}

ConvexPolygon ConvexPolygon::translated(Point2 offset) const {
    std::vector<Point2> v = verts_;
    for (Point2& p : v) p = p + offset;
    return ConvexPolygon(std::move(v), tol_);
}

ConvexPolygon ConvexPolygon::rotated(double angle) const {
    const double c = std::cos(angle), s = std::sin(angle);
    std::vector<Point2> v = verts_;
    for (Point2& p : v) p = {c * p.x - s * p.y, s * p.x + c * p.y};
    return ConvexPolygon(std::move(v), tol_);
}

Measure measure(const ConvexPolygon& poly) {
    constexpr double kStraightAngle = 1e-9; // rad; collinear-merge threshold
    const auto& v = poly.vertices();
    const std::size_t n = v.size();

    Measure m;
    m.area = poly.area();
    m.perimeter = poly.perimeter();
    m.is_convex = true; // construction enforces it

    if (m.area <= poly.tolerance() * poly.diameter() * poly.diameter())
        throw DegenerateGeometry("degenerate polygon in measure");

    int sides = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 e1 = v[i] - v[(i + n - 1) % n];
        const Point2 e2 = v[(i + 1) % n] - v[i];
        const double turn = std::atan2(cross(e1, e2), dot(e1, e2));
        if (std::abs(turn) > kStraightAngle) ++sides;
    }
    m.n_sides = sides;
    return m;
}

ConvexPolygon regular_polygon(int n, double area) {
    if (n < 3) throw InvalidArgument("regular polygon needs n >= 3");
    if (!(area > 0.0)) throw InvalidArgument("regular polygon needs positive area");
    const double central = 2.0 * M_PI / n;
    const double radius = std::sqrt(2.0 * area / (n * std::sin(central)));
    std::vector<Point2> v;
    v.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double a = central * i;
        v.push_back({radius * std::cos(a), radius * std::sin(a)});
    }
    return ConvexPolygon(std::move(v));
}

std::vector<Point2> clip_halfplane(std::span<const Point2> loop, const HalfPlane& hp) {
    std::vector<Point2> out;
    out.reserve(loop.size() + 2);
    const std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 cur = loop[i];
        const Point2 nxt = loop[(i + 1) % n];
        const double dc = hp.signed_dist(cur);
        const double dn = hp.signed_dist(nxt);
        if (dc >= 0.0) out.push_back(cur);
        if ((dc > 0.0 && dn < 0.0) || (dc < 0.0 && dn > 0.0)) {
            const double t = dc / (dc - dn);
            out.push_back({cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
        }
    }
    return out;
}

namespace {

constexpr double kEmptyArea = 1e-12;

std::optional<ConvexPolygon> loop_to_polygon(std::vector<Point2> loop, double tol) {
    if (loop.size() < 3) return std::nullopt;
    if (loop_area(loop) <= kEmptyArea) return std::nullopt;
    return ConvexPolygon(std::move(loop), tol);
}

} // namespace

std::optional<ConvexPolygon> clip(const ConvexPolygon& p, const ConvexPolygon& q) {
    std::vector<Point2> loop = p.vertices();
    for (std::size_t i = 0; i < q.size() && !loop.empty(); ++i)
        loop = clip_halfplane(loop, q.edge_halfplane(i));
    return loop_to_polygon(std::move(loop), std::max(p.tolerance(), q.tolerance()));
}

double clip_area(const ConvexPolygon& p, const ConvexPolygon& q) {
    const auto r = clip(p, q);
    return r ? r->area() : 0.0;
}

std::optional<ConvexPolygon> clip_halfplanes(const ConvexPolygon& poly,
                                             std::span<const HalfPlane> planes) {
    std::vector<Point2> loop = poly.vertices();
    for (const HalfPlane& hp : planes) {
        if (loop.empty()) break;
        loop = clip_halfplane(loop, hp);
    }
    return loop_to_polygon(std::move(loop), poly.tolerance());
}

double inner_parallel_area(const ConvexPolygon& poly, double t) {
    if (t < 0.0) throw InvalidArgument("inner parallel distance must be >= 0");
    if (t == 0.0) return poly.area();
    std::vector<Point2> loop = poly.vertices();
    for (std::size_t i = 0; i < poly.size() && !loop.empty(); ++i) {
        HalfPlane hp = poly.edge_halfplane(i);
        hp.offset += t;
        loop = clip_halfplane(loop, hp);
    }
    if (loop.size() < 3) return 0.0;
    return std::max(loop_area(loop), 0.0);
}

double inradius(const ConvexPolygon& poly) {
    double lo = 0.0;
    double hi = poly.diameter();
    while (hi - lo > 1e-12 * hi) {
        const double mid = 0.5 * (lo + hi);
        (inner_parallel_area(poly, mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

ConvexPolygon convex_hull(std::span<const Point2> points) {
    std::vector<Point2> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }),
              pts.end());
    if (pts.size() < 3) throw DegenerateGeometry("hull needs at least 3 distinct points");

    auto build = [&](auto begin, auto end) {
        std::vector<Point2> chain;
        for (auto it = begin; it != end; ++it) {
            while (chain.size() >= 2 &&
                   cross(chain[chain.size() - 1] - chain[chain.size() - 2],
                         *it - chain[chain.size() - 1]) <= 0.0)
                chain.pop_back();
            chain.push_back(*it);
        }
        return chain;
    };
    std::vector<Point2> lower = build(pts.begin(), pts.end());
    std::vector<Point2> upper = build(pts.rbegin(), pts.rend());
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return ConvexPolygon(std::move(lower));
}

double segment_dist(Point2 a0, Point2 a1, Point2 b0, Point2 b1) {
    auto point_seg = [](Point2 p, Point2 s0, Point2 s1) {
        const Point2 d = s1 - s0;
        const double len2 = dot(d, d);
        double t = len2 > 0.0 ? dot(p - s0, d) / len2 : 0.0;
        t = std::clamp(t, 0.0, 1.0);
        return dist(p, s0 + d * t);
    };
    // Proper crossing means distance zero.
    const double d1 = cross(a1 - a0, b0 - a0);
    const double d2 = cross(a1 - a0, b1 - a0);
    const double d3 = cross(b1 - b0, a0 - b0);
    const double d4 = cross(b1 - b0, a1 - b0);
    if (((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0))) return 0.0;
    return std::min(std::min(point_seg(a0, b0, b1), point_seg(a1, b0, b1)),
                    std::min(point_seg(b0, a0, a1), point_seg(b1, a0, a1)));
}

} // namespace honeycomb
