#pragma once

#include <stdexcept>
#include <string>

namespace honeycomb {

// Base for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad caller input (n < 3, alpha out of range, ...).
struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

// Polygon with non-positive area, fewer than 3 distinct vertices, or a
// convexity violation beyond tolerance.
struct DegenerateGeometry : Error {
    explicit DegenerateGeometry(const std::string& msg) : Error(msg) {}
};

// Iterative solver failed to bracket or converge.
struct SolverFailure : Error {
    explicit SolverFailure(const std::string& msg) : Error(msg) {}
};

// Requested combination has no evaluation method.
struct Unsupported : Error {
    explicit Unsupported(const std::string& msg) : Error(msg) {}
};

// Greedy cell growth terminated with a side that touches nothing.
struct GrowthIncomplete : Error {
    explicit GrowthIncomplete(const std::string& msg) : Error(msg) {}
};

} // namespace honeycomb
