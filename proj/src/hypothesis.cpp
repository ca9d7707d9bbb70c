#include "honeycomb/hypothesis.hpp"

#include <chrono>
#include <cmath>
#include <random>

namespace honeycomb {

namespace {

double regular_value_real(FunctionalKind kind, double t) {
    switch (kind) {
        case FunctionalKind::Cheeger: return cheeger_regular_real(t);
        case FunctionalKind::LogCap: return logcap_regular_real(t);
        case FunctionalKind::Perimeter: return perimeter_regular_real(t);
        case FunctionalKind::Lambda1:
            throw Unsupported("lambda1 has no closed form on regular polygons");
    }
    throw InvalidArgument("unknown functional kind");
}

} // namespace

CurveReport curve_check(FunctionalKind kind, double beta, double t_max, double step) {
    if (!(step > 0.0)) throw InvalidArgument("curve check needs step > 0");
    if (!(t_max >= 6.0 + 2.0 * step))
        throw InvalidArgument("curve check needs t_max >= 6 + 2 step");
    if (beta == 0.0) throw InvalidArgument("curve check needs beta != 0");

    CurveReport rep;
    rep.kind = kind;
    rep.beta = beta;
    rep.t_max = t_max;
    rep.step = step;
    // F(P_t*) decreases in t for every kind here, so the orientation of
    // psi = F^beta is fixed by the sign of beta. The convexity claims
    // pair with it: convex when decreasing, concave when increasing.
    rep.expect_decreasing = beta > 0.0;
    rep.expect_convex = beta > 0.0;

    const long npts = static_cast<long>(std::floor((t_max - 3.0) / step)) + 1;
    std::vector<double> psi(static_cast<std::size_t>(npts));
    for (long i = 0; i < npts; ++i)
        psi[static_cast<std::size_t>(i)] =
            std::pow(regular_value_real(kind, 3.0 + step * static_cast<double>(i)), beta);

    constexpr double kMargin = -1e-9;
    double mono = 1e300, conv = 1e300;
    double mono_t = 3.0, conv_t = 3.0;
    for (long i = 0; i + 1 < npts; ++i) {
        const double d = psi[static_cast<std::size_t>(i + 1)] - psi[static_cast<std::size_t>(i)];
        const double oriented = rep.expect_decreasing ? -d : d;
        if (oriented < mono) {
            mono = oriented;
            mono_t = 3.0 + step * static_cast<double>(i);
        }
    }
    for (long i = 1; i + 1 < npts; ++i) {
        const double s = psi[static_cast<std::size_t>(i + 1)] -
                         2.0 * psi[static_cast<std::size_t>(i)] +
                         psi[static_cast<std::size_t>(i - 1)];
        const double oriented = rep.expect_convex ? s : -s;
        if (oriented < conv) {
            conv = oriented;
            conv_t = 3.0 + step * static_cast<double>(i);
        }
    }
    rep.monotone_margin = mono;
    rep.convexity_margin = conv;
    rep.pass = mono >= kMargin && conv >= kMargin;
    if (!rep.pass) rep.fail_t = (mono < conv) ? mono_t : conv_t;
    return rep;
}

SandwichReport digamma_sandwich_scan(double grid_step, double c_lo, double c_hi,
                                     double c_g2, long terms) {
    if (!(grid_step > 0.0) || grid_step > 1e-3 + 1e-15)
        throw InvalidArgument("sandwich scan needs 0 < grid_step <= 1e-3");

    SandwichReport rep;
    rep.pass = true;
    rep.worst_slack = 1e300;

    std::vector<double> grid;
    for (double a = grid_step; a < 1.0 / 3.0; a += grid_step) grid.push_back(a);
    grid.push_back(1.0 / 3.0);

    for (double a : grid) {
        const DigammaEval e = digamma_g(a, terms);
        const double s1 = -e.g1; // partial sum, underestimates -g'
        const double s2 = -e.g2; // partial sum, underestimates -g''
        // c_lo a^2 < -g': enough that the underestimate already exceeds it.
        const double slack_lo = s1 - c_lo * a * a;
        // -g' < c_hi a^2: the overestimate must stay below it.
        const double slack_hi = c_hi * a * a - (s1 + e.tail_bound);
        // -g'' > c_g2 a.
        const double slack_g2 = s2 - c_g2 * a;
        const double slack = std::min(std::min(slack_lo, slack_hi), slack_g2);
        if (slack < rep.worst_slack) {
            rep.worst_slack = slack;
            rep.worst_alpha = a;
        }
        if (slack <= 0.0) rep.pass = false;
    }
    return rep;
}

namespace {

// Surrogate gamma values for lambda1: gamma_hat(6) is the fixed
// numeric estimate 2.433^2 pi, not the sharper finite element value.
double gamma_hat(int n, const InductionConfig& cfg) {
    if (n == 3) return 4.0 * M_PI * M_PI / std::sqrt(3.0);
    if (n == 4) return 2.0 * M_PI * M_PI;
    if (n == 5) return cfg.a;
    if (n == 6) return 2.433 * 2.433 * M_PI;
    if (n == 7) return cfg.b;
    return lambda1_ball();
}

struct BruteWalker {
    int k_max = 0;
    int n_max = 0;
    double target_term = 0.0;     // gamma_hat(6)^e
    std::vector<double> ghat_pow; // gamma_hat(n)^e, indexed by n
    InductionReport* rep = nullptr;
    std::vector<int> current;

    // Depth-first over nondecreasing sequences with sum <= 6k; the budget
    // tracks 6 * (picks so far) - sum so far, so mean <= 6 iff budget >= 0.
    bool walk(int k_used, int min_n, int budget, double acc) {
        if (k_used > 0) {
            ++rep->multisets_checked;
            const double slack = acc - static_cast<double>(k_used) * target_term;
            if (slack < rep->worst_slack) rep->worst_slack = slack;
            if (slack < -1e-9) {
                rep->counterexample = current;
                rep->pass = false;
                return false;
            }
        }
        if (k_used == k_max) return true;
        for (int n = min_n; n <= n_max; ++n) {
            if (n - 6 > budget) break; // mean constraint already violated
            current.push_back(n);
            const bool keep =
                walk(k_used + 1, n, budget + 6 - n, acc + ghat_pow[static_cast<std::size_t>(n)]);
            current.pop_back();
            if (!keep) return false;
        }
        return true;
    }
};

} // namespace

InductionReport induction_bruteforce(const InductionConfig& cfg) {
    if (cfg.k_max < 1 || cfg.n_max < 7 || !(cfg.a > 0.0) || !(cfg.b > 0.0))
        throw InvalidArgument("bad induction configuration");

    const auto t0 = std::chrono::steady_clock::now();
    InductionReport rep;
    rep.pass = true;
    rep.worst_slack = 1e300;

    const double e = cfg.exponent == InductionExponent::Half ? 0.5 : 1.0;
    BruteWalker w;
    w.k_max = cfg.k_max;
    w.n_max = cfg.n_max;
    w.target_term = std::pow(gamma_hat(6, cfg), e);
    w.ghat_pow.resize(static_cast<std::size_t>(cfg.n_max) + 1, 0.0);
    for (int n = 3; n <= cfg.n_max; ++n)
        w.ghat_pow[static_cast<std::size_t>(n)] = std::pow(gamma_hat(n, cfg), e);
    w.rep = &rep;
    w.walk(0, 3, 0, 0.0);

    rep.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::vector<ChainLine> chain_check() {
    // Everything in units of sqrt(pi). The base constants check the
    // rounded estimates against their exact sources; the combination
    // lines are the two-, three-, and four-cell cases of the induction.
    const double triangle = 2.0 * M_PI / (std::sqrt(M_PI) * std::pow(3.0, 0.25));
    const double square = std::sqrt(2.0 * M_PI);
    const double ball = bessel_j0_zero1();
    const double pentagon = std::sqrt(6.022);
    const double heptagon = std::sqrt(5.82);
    const double hexagon = 2.433;

    std::vector<ChainLine> lines;
    auto push = [&](std::string name, double lhs, double rhs) {
        ChainLine l;
        l.name = std::move(name);
        l.lhs = lhs;
        l.rhs = rhs;
        l.slack = lhs - rhs;
        l.pass = l.slack >= 0.0;
        lines.push_back(std::move(l));
    };

    push("triangle constant: sqrt(gamma(3)/pi) >= 2.693", triangle, 2.693);
    push("square constant: sqrt(gamma(4)/pi) >= 2.506", square, 2.506);
    push("pentagon assumption: sqrt(a/pi) >= 2.4539", pentagon, 2.4539);
    push("heptagon assumption: sqrt(b/pi) >= 2.4124", heptagon, 2.4124);
    push("ball constant: sqrt(lambda1(B)/pi) >= 2.404", ball, 2.404);

    push("ball + triangle >= 2 hexagons", 2.404 + 2.693, 2.0 * hexagon);
    push("ball + square >= 2 hexagons", 2.404 + 2.506, 2.0 * hexagon);
    push("ball + 2 pentagons >= 3 hexagons", 2.404 + 2.0 * 2.4539, 3.0 * hexagon);
    push("2 balls + triangle >= 3 hexagons", 2.0 * 2.404 + 2.693, 3.0 * hexagon);
    push("pentagon + heptagon >= 2 hexagons", 2.4539 + 2.4124, 2.0 * hexagon);
    push("2 heptagons + square >= 3 hexagons", 2.0 * 2.4124 + 2.506, 3.0 * hexagon);
    push("heptagon + square >= 2 hexagons", 2.4124 + 2.506, 2.0 * hexagon);
    push("3 heptagons + triangle >= 4 hexagons", 3.0 * 2.4124 + 2.693, 4.0 * hexagon);
    push("2 heptagons + triangle >= 3 hexagons", 2.0 * 2.4124 + 2.693, 3.0 * hexagon);
    push("heptagon + triangle >= 2 hexagons", 2.4124 + 2.693, 2.0 * hexagon);
    return lines;
}

JensenReport h3prime_jensen_check(FunctionalKind kind, double beta, long samples,
                                  unsigned rng_seed) {
    const bool expect_ge = beta > 0.0; // decreasing convex curve
    const double target = std::pow(regular_value_real(kind, 6.0), beta);

    std::mt19937 rng(rng_seed);
    std::uniform_int_distribution<int> kd(1, 10);
    std::uniform_int_distribution<int> nd(3, 12);

    JensenReport rep;
    rep.pass = true;
    long attempts = 0;
    const long max_attempts = samples * 1000;
    while (rep.samples_run < samples && attempts < max_attempts) {
        ++attempts;
        const int k = kd(rng);
        std::vector<int> ns(static_cast<std::size_t>(k));
        int sum = 0;
        for (int& n : ns) {
            n = nd(rng);
            sum += n;
        }
        if (sum > 6 * k) continue; // mean constraint
        ++rep.samples_run;
        double acc = 0.0;
        for (int n : ns) acc += std::pow(regular_value_real(kind, n), beta);
        const double mean = acc / k;
        const double tol = 1e-12 * std::abs(target);
        const bool ok = expect_ge ? mean >= target - tol : mean <= target + tol;
        if (!ok) {
            rep.pass = false;
            rep.failing_multiset = ns;
            break;
        }
    }
    if (rep.samples_run < samples) rep.pass = false; // sampler starved
    return rep;
}

} // namespace honeycomb
