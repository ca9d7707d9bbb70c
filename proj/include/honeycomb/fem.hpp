#pragma once

#include <array>
#include <vector>

#include "honeycomb/geometry.hpp"

namespace honeycomb {

struct TriMesh {
    std::vector<Point2> vertices;
    std::vector<std::array<int, 3>> triangles;
    std::vector<char> on_boundary; // 1 for vertices on the polygon boundary

    std::size_t n_interior() const;
};

// Triangulates a convex polygon: boundary points at spacing ~h, interior
// points on a jittered hexagonal lattice of spacing h, Delaunay
// triangulation by Bowyer-Watson insertion. Deterministic for fixed input.
TriMesh mesh_polygon(const ConvexPolygon& poly, double h);

struct EigenResult {
    double lambda1 = 0.0;
    double mesh_h = 0.0;
    int n_vertices = 0;
    int n_triangles = 0;
    int iterations = 0;
};

// Smallest Dirichlet eigenvalue of -Laplace by piecewise-linear finite
// elements (consistent mass matrix, so the value is an upper bound up to
// iteration error). Inverse power iteration with a skyline Cholesky
// factorization; stops when successive Rayleigh quotients agree to 1e-10
// relative. Throws SolverFailure if the mesh has fewer than 200 triangles.
EigenResult dirichlet_lambda1(const ConvexPolygon& poly, double h_target);

} // namespace honeycomb
