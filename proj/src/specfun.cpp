#include "honeycomb/specfun.hpp"

#include <cmath>

namespace honeycomb {

double gamma_fn(double x) {
    // Lanczos coefficients for g = 7, n = 9 (Godfrey).
    static const double coef[9] = {
        0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
        771.32342877765313,    -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};
    if (x < 0.5) {
        // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
        return M_PI / (std::sin(M_PI * x) * gamma_fn(1.0 - x));
    }
    const double z = x - 1.0;
    double a = coef[0];
    for (int i = 1; i < 9; ++i) a += coef[i] / (z + i);
    const double t = z + 7.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

double bessel_j0(double x) {
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int m = 1; m < 60; ++m) {
        term *= -q / (static_cast<double>(m) * m);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

double bessel_j1(double x) {
    const double q = 0.25 * x * x;
    double term = 0.5 * x, sum = term;
    for (int m = 1; m < 60; ++m) {
        term *= -q / (static_cast<double>(m) * (m + 1.0));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

double bessel_j0_zero1() {
    double x = 2.4;
    for (int i = 0; i < 50; ++i) {
        const double f = bessel_j0(x);
        const double df = -bessel_j1(x);
        const double step = f / df;
        x -= step;
        if (std::abs(step) < 1e-15 * x) break;
    }
    return x;
}

DigammaEval digamma_g(double alpha, long terms) {
    if (!(alpha > 0.0) || alpha > 1.0 / 3.0 + 1e-15)
        throw InvalidArgument("digamma series needs 0 < alpha <= 1/3");
    if (terms < 10) throw InvalidArgument("digamma series needs at least 10 terms");

    const double a2 = alpha * alpha;
    double s1 = 0.0, s2 = 0.0;
    // Summed from the small tail terms upward to limit roundoff.
    for (long n = terms; n >= 1; --n) {
        const double nn = static_cast<double>(n);
        const double p = nn * nn - a2;
        const double q = nn * nn - 4.0 * a2;
        s1 += 12.0 * a2 * nn / (p * q);
        s2 += 12.0 * (2.0 * alpha * nn * nn * nn * nn * nn - 8.0 * a2 * a2 * alpha * nn) /
              (p * p * q * q);
    }

    const double big_n = static_cast<double>(terms);
    const double n2 = big_n * big_n;
    const double tail1 = 2.0 * std::log((n2 - a2) / (n2 - 4.0 * a2));
    // Integral of 24 alpha x^5 / ((x^2-a2)^2 (x^2-4 a2)^2) over [terms, inf),
    // an upper bound for the g'' remainder.
    const double tail2 =
        12.0 * alpha *
        (-(8.0 / (27.0 * a2)) * std::log((n2 - a2) / (n2 - 4.0 * a2)) +
         (1.0 / 9.0) / (n2 - a2) + (16.0 / 9.0) / (n2 - 4.0 * a2));

    DigammaEval out;
    out.alpha = alpha;
    out.g1 = -s1;
    out.g2 = -s2;
    out.terms = terms;
    out.tail_bound = tail1;
    out.g2_tail_bound = tail2;
    return out;
}

} // namespace honeycomb
