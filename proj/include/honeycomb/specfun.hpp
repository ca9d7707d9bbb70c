#pragma once

#include "honeycomb/errors.hpp"

namespace honeycomb {

// Euler Gamma function by the Lanczos approximation (g = 7, 9 terms),
// relative accuracy around 1e-13 for positive arguments.
double gamma_fn(double x);

// Bessel J0 and J1 by their power series; adequate for |x| <= 12.
double bessel_j0(double x);
double bessel_j1(double x);

// First positive zero of J0, Newton-refined to machine precision.
double bessel_j0_zero1();

// Partial sums of the series
//   -g'(alpha)  = sum_{n>=1} 12 alpha^2 n / ((n^2 - alpha^2)(n^2 - 4 alpha^2))
//   -g''(alpha) = sum_{n>=1} 12 (2 alpha n^5 - 8 alpha^5 n) / ((n^2 - alpha^2)^2 (n^2 - 4 alpha^2)^2)
// with integral-comparison tail bounds. All series terms are positive on
// 0 < alpha <= 1/3, so the partial sums are increasing lower estimates.
struct DigammaEval {
    double alpha = 0.0;
    double g1 = 0.0;        // partial sum for g'(alpha), negative
    double g2 = 0.0;        // partial sum for g''(alpha), negative
    long terms = 0;
    double tail_bound = 0.0;    // bound on the g' remainder
    double g2_tail_bound = 0.0; // bound on the g'' remainder
};

DigammaEval digamma_g(double alpha, long terms);

} // namespace honeycomb
