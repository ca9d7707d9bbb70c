#pragma once

#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "honeycomb/functionals.hpp"
#include "honeycomb/specfun.hpp"

namespace honeycomb {

// Sampled check that t -> F(P_t*)^beta is monotone and convex/concave
// with the expected orientation. For decreasing functionals with beta > 0
// the curve must be decreasing and convex; for increasing functionals
// with beta < 0 it must be increasing and concave.
struct CurveReport {
    FunctionalKind kind = FunctionalKind::Cheeger;
    double beta = 0.0;
    double t_min = 3.0, t_max = 0.0, step = 0.0;
    bool expect_decreasing = true; // orientation actually checked
    bool expect_convex = true;
    double monotone_margin = 0.0;  // worst oriented first difference; >= 0 conforms
    double convexity_margin = 0.0; // worst oriented second difference; >= 0 conforms
    bool pass = false;
    double fail_t = 0.0; // grid point of the worst violation when !pass
};

CurveReport curve_check(FunctionalKind kind, double beta, double t_max, double step);

// Scan of the bounds c_lo a^2 < -g'(a) < c_hi a^2 and -g''(a) > c_g2 a
// over a in (0, 1/3]. Default coefficients 13, 36, 22; passing others
// supports falsifiability controls. One-sided logic: partial sums
// underestimate the series, partial + tail overestimates it.
struct SandwichReport {
    bool pass = false;
    double worst_alpha = 0.0;
    double worst_slack = 0.0; // smallest slack across all three bounds
};

SandwichReport digamma_sandwich_scan(double grid_step, double c_lo = 13.0,
                                     double c_hi = 36.0, double c_g2 = 22.0,
                                     long terms = 20000);

// Brute-force check of the induction inequality: every multiset
// {n_1..n_k}, 3 <= n_i <= n_max, k <= k_max, mean <= 6, must satisfy
//   sum gamma_hat(n_i)^e >= k gamma_hat(6)^e,  e in {1/2, 1}.
// gamma_hat uses exact gamma(3), gamma(4); a at 5; the fixed 2.433^2 pi
// estimate at 6; b at 7; the ball value for n >= 8.
enum class InductionExponent { Half, One };

struct InductionConfig {
    double a = kDefaultGamma5OverPi * std::numbers::pi;
    double b = kDefaultGamma7OverPi * std::numbers::pi;
    int k_max = 8;
    int n_max = 12;
    InductionExponent exponent = InductionExponent::Half;
};

struct InductionReport {
    bool pass = false;
    std::optional<std::vector<int>> counterexample;
    double worst_slack = 0.0; // min of sum - k*target over all multisets
    long multisets_checked = 0;
    double runtime_seconds = 0.0;
};

InductionReport induction_bruteforce(const InductionConfig& cfg);

// The individual numeric inequalities behind the induction argument,
// evaluated standalone. All quantities are in units of sqrt(pi).
struct ChainLine {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool pass = false;
};

std::vector<ChainLine> chain_check();

// Consistency test: random integer multisets with mean <= 6 must satisfy
// the Jensen conclusion whenever the sampled curve passed its check.
struct JensenReport {
    bool pass = false;
    long samples_run = 0;
    std::vector<int> failing_multiset;
};

JensenReport h3prime_jensen_check(FunctionalKind kind, double beta, long samples,
                                  unsigned rng_seed = 12345);

} // namespace honeycomb
