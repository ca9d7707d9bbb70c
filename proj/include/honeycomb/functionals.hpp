#pragma once

#include <string>
#include <vector>

#include "honeycomb/geometry.hpp"

namespace honeycomb {

// The four shape functionals. alpha is the homogeneity degree |F(tP)| =
// t^{-alpha} F(P) for decreasing kinds and t^{alpha} F(P) for increasing
// ones.
enum class FunctionalKind { Cheeger, Lambda1, LogCap, Perimeter };
enum class Direction { Decreasing, Increasing };

double functional_alpha(FunctionalKind kind);     // 1, 2, 1, 1
Direction functional_direction(FunctionalKind kind);
std::string functional_name(FunctionalKind kind);
FunctionalKind functional_from_name(const std::string& name);

enum class EvalMethod { ClosedForm, InnerCheegerSolver, Fem, Series };

struct FunctionalValue {
    double value = 0.0;
    FunctionalKind kind = FunctionalKind::Cheeger;
    EvalMethod method = EvalMethod::ClosedForm;
    double fem_h = 0.0; // mesh size when method == Fem
};

// Cheeger constant of the unit-area regular n-gon,
//   h = (2 n sin(pi/n) + sqrt(2 pi n sin(2 pi/n))) / sqrt(2 n sin(2 pi/n)).
double cheeger_regular(int n);
// The same formula extended to real t >= 3.
double cheeger_regular_real(double t);

// Cheeger constant of a convex polygon: h = 1/t* where t* solves
// |P_{-t}| = pi t^2, bisection to 1e-10 relative.
FunctionalValue cheeger_convex(const ConvexPolygon& poly);

// Smallest Dirichlet eigenvalue by finite elements (see fem.hpp).
FunctionalValue lambda1_fem(const ConvexPolygon& poly, double h_target);

// Logarithmic capacity of the unit-area regular n-gon,
//   sqrt(n tan(pi/n)) Gamma(1 + 1/n) / (sqrt(pi) 2^{2/n} Gamma(1/2 + 1/n)).
double logcap_regular(int n);
double logcap_regular_real(double t);

// Perimeter of the unit-area regular n-gon, 2 sqrt(n tan(pi/n)).
double perimeter_regular(int n);
double perimeter_regular_real(double t);

// lambda1 of the unit-area disk, pi * j_{0,1}^2.
double lambda1_ball();

// Detects a regular n-gon up to rigid motion within relative tolerance.
// Returns n, or 0 when not regular.
int detect_regular(const ConvexPolygon& poly, double rel_tol = 1e-9);

// Dispatch. LogCap is only available on (detected) regular polygons;
// anything else throws Unsupported. Lambda1 uses h_target =
// 0.02 sqrt(area) unless overridden.
FunctionalValue evaluate(FunctionalKind kind, const ConvexPolygon& poly);
FunctionalValue evaluate(FunctionalKind kind, const ConvexPolygon& poly, double lambda1_h);

enum class Exactness { Exact, LowerBound, UpperBound };

struct GammaPoint {
    int n = 0;
    double gamma = 0.0;
    Exactness exactness = Exactness::Exact;
};

std::string exactness_name(Exactness e);

// gamma(n) = min of the area-normalized functional over convex n-gons,
// n = 3..n_max. Closed forms for Cheeger/LogCap/Perimeter. For Lambda1:
// exact at n = 3, 4; the assumed lower bounds a, b at n = 5, 7; the
// Faber-Krahn ball value for n >= 8; a finite element upper bound at
// n = 6.
std::vector<GammaPoint> gamma_curve(FunctionalKind kind, int n_max);

// Defaults for the Lambda1 gamma curve assumptions.
inline constexpr double kDefaultGamma5OverPi = 6.022;
inline constexpr double kDefaultGamma7OverPi = 5.82;

} // namespace honeycomb
