#pragma once

#include <optional>
#include <span>
#include <vector>

#include "honeycomb/errors.hpp"

namespace honeycomb {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    Point2 operator+(Point2 o) const { return {x + o.x, y + o.y}; }
    Point2 operator-(Point2 o) const { return {x - o.x, y - o.y}; }
    Point2 operator*(double s) const { return {x * s, y * s}; }
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
double norm(Point2 a);
double dist(Point2 a, Point2 b);

// Oriented line n.x >= c; n is the inward unit normal of the kept side.
struct HalfPlane {
    Point2 normal;
    double offset = 0.0;

    double signed_dist(Point2 p) const { return dot(normal, p) - offset; }
};

// Closed convex polygon, vertices in counterclockwise order.
//
// `tolerance` is a relative slack: consecutive duplicates are vertices
// closer than tolerance * diameter, and convexity requires every corner
// cross product >= -tolerance * |e1| * |e2|.
class ConvexPolygon {
  public:
    static constexpr double kDefaultTolerance = 1e-9;

    ConvexPolygon(std::vector<Point2> vertices, double tolerance = kDefaultTolerance);

    const std::vector<Point2>& vertices() const { return verts_; }
    double tolerance() const { return tol_; }
    std::size_t size() const { return verts_.size(); }
    Point2 vertex(std::size_t i) const { return verts_[i % verts_.size()]; }

    double area() const;
    double perimeter() const;
    double diameter() const;
    Point2 centroid() const;

    // Inward half-plane of edge i (from vertex i to vertex i+1).
    HalfPlane edge_halfplane(std::size_t i) const;

    // Signed distance to the boundary: positive inside, negative outside.
    // For interior points this equals the true distance to the boundary.
    double boundary_dist(Point2 p) const;
    bool contains(Point2 p, double slack = 0.0) const;

    ConvexPolygon scaled(double factor) const;       // about the origin
    ConvexPolygon translated(Point2 offset) const;
    ConvexPolygon rotated(double angle) const;       // about the origin

  private:
    std::vector<Point2> verts_;
    double tol_;
};

struct Measure {
    double area = 0.0;
    double perimeter = 0.0;
    int n_sides = 0;
    bool is_convex = false;
};

// Area by shoelace, perimeter, and side count with collinear chains
// merged (direction change below 1e-9 rad counts as straight).
Measure measure(const ConvexPolygon& poly);

// Regular n-gon of the given area, one vertex on the positive x-axis.
ConvexPolygon regular_polygon(int n, double area);

// P intersect Q by successive half-plane clipping. Empty result (area
// <= 1e-12) is reported as nullopt.
std::optional<ConvexPolygon> clip(const ConvexPolygon& p, const ConvexPolygon& q);

// Convenience: area of the intersection, 0 when empty.
double clip_area(const ConvexPolygon& p, const ConvexPolygon& q);

// Clip a vertex loop against one half-plane. Low-level building block;
// the result may be degenerate (fewer than 3 vertices).
std::vector<Point2> clip_halfplane(std::span<const Point2> loop, const HalfPlane& hp);

// Intersection of the polygon with finitely many extra half-planes.
std::optional<ConvexPolygon> clip_halfplanes(const ConvexPolygon& poly,
                                             std::span<const HalfPlane> planes);

// Area of {x in P : dist(x, boundary) >= t}; 0 once t reaches the inradius.
double inner_parallel_area(const ConvexPolygon& poly, double t);

// Radius of the largest inscribed disk, by bisection to 1e-12 relative.
double inradius(const ConvexPolygon& poly);

// Convex hull of a point set (monotone chain), counterclockwise.
ConvexPolygon convex_hull(std::span<const Point2> points);

// Distance between two segments [a0,a1] and [b0,b1].
double segment_dist(Point2 a0, Point2 a1, Point2 b0, Point2 b1);

} // namespace honeycomb
