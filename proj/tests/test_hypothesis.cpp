#include "doctest.h"

#include <cmath>

#include "honeycomb/hypothesis.hpp"

using namespace honeycomb;

TEST_CASE("curve checks pass on a reduced grid") {
    // Full-range step-0.01 runs live in the acceptance suite.
    const CurveReport c1 = curve_check(FunctionalKind::Cheeger, 2.0 / 3.0, 20.0, 0.01);
    CHECK(c1.pass);
    CHECK(c1.expect_decreasing);
    CHECK(c1.expect_convex);
    CHECK(c1.monotone_margin >= 0.0);
    CHECK(c1.convexity_margin >= 0.0);

    CHECK(curve_check(FunctionalKind::Cheeger, 2.0, 20.0, 0.01).pass);

    const CurveReport lc = curve_check(FunctionalKind::LogCap, -2.0, 20.0, 0.01);
    CHECK(lc.pass);
    CHECK_FALSE(lc.expect_decreasing);
    CHECK_FALSE(lc.expect_convex);

    CHECK(curve_check(FunctionalKind::Perimeter, -2.0, 20.0, 0.01).pass);
}

TEST_CASE("curve check verdicts survive step refinement") {
    const CurveReport coarse = curve_check(FunctionalKind::Cheeger, 2.0 / 3.0, 20.0, 0.01);
    const CurveReport fine = curve_check(FunctionalKind::Cheeger, 2.0 / 3.0, 20.0, 0.001);
    CHECK(coarse.pass);
    CHECK(fine.pass);
}

TEST_CASE("curve check rejects lambda1 and bad grids") {
    CHECK_THROWS_AS(curve_check(FunctionalKind::Lambda1, 0.5, 20.0, 0.01), Unsupported);
    CHECK_THROWS_AS(curve_check(FunctionalKind::Cheeger, 0.5, 5.0, 0.01), InvalidArgument);
}

TEST_CASE("curve check margins are strictly positive for the verified cases") {
    for (const auto& [kind, beta] :
         std::initializer_list<std::pair<FunctionalKind, double>>{
             {FunctionalKind::Cheeger, 2.0 / 3.0},
             {FunctionalKind::Cheeger, 2.0},
             {FunctionalKind::LogCap, -2.0},
             {FunctionalKind::Perimeter, -2.0}}) {
        const CurveReport r = curve_check(kind, beta, 20.0, 0.01);
        CHECK(r.monotone_margin > 0.0);
        CHECK(r.convexity_margin > 0.0);
    }
}

TEST_CASE("digamma sandwich scan") {
    const SandwichReport rep = digamma_sandwich_scan(1e-3);
    CHECK(rep.pass);
    CHECK(rep.worst_slack > 0.0);
}

TEST_CASE("digamma sandwich negative control") {
    // Demanding 50 a^2 < -g'(a) is false everywhere (the sum is ~14.4 a^2
    // near zero and stays below 36 a^2).
    const SandwichReport rep = digamma_sandwich_scan(1e-3, 50.0);
    CHECK_FALSE(rep.pass);
}

TEST_CASE("induction brute force small cases") {
    InductionConfig cfg;
    cfg.k_max = 2;
    cfg.n_max = 12;
    const InductionReport rep = induction_bruteforce(cfg);
    CHECK(rep.pass);
    CHECK(rep.multisets_checked > 0);
    // the slack of {5, 7}: sqrt(a) + sqrt(b) - 2 * 2.433 sqrt(pi)
    const double tight =
        std::sqrt(6.022 * M_PI) + std::sqrt(5.82 * M_PI) - 2.0 * 2.433 * std::sqrt(M_PI);
    CHECK(rep.worst_slack <= tight + 1e-12);
    CHECK(tight > 0.0);
    CHECK(tight == doctest::Approx(0.000444 * std::sqrt(M_PI)).epsilon(0.05));
}

TEST_CASE("induction brute force full run passes for both exponents") {
    InductionConfig cfg;
    const InductionReport half = induction_bruteforce(cfg);
    CHECK(half.pass);
    cfg.exponent = InductionExponent::One;
    const InductionReport one = induction_bruteforce(cfg);
    CHECK(one.pass);
}

TEST_CASE("induction negative control finds a counterexample") {
    InductionConfig cfg;
    cfg.a = 5.783 * M_PI;
    cfg.b = 5.783 * M_PI;
    const InductionReport rep = induction_bruteforce(cfg);
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.counterexample.has_value());
    // mean of the counterexample must respect the constraint
    int sum = 0;
    for (int n : *rep.counterexample) sum += n;
    CHECK(sum <= 6 * static_cast<int>(rep.counterexample->size()));
}

TEST_CASE("chain check slack values") {
    const auto lines = chain_check();
    REQUIRE(lines.size() == 15);
    for (const ChainLine& l : lines) {
        INFO(l.name);
        CHECK(l.pass);
        CHECK(l.slack >= 0.0);
    }
    auto find = [&](const std::string& needle) -> const ChainLine& {
        for (const ChainLine& l : lines)
            if (l.name.find(needle) != std::string::npos) return l;
        FAIL("missing chain line");
        return lines.front();
    };
    CHECK(find("ball + triangle").slack == doctest::Approx(0.231).epsilon(1e-10));
    CHECK(find("ball + square").slack == doctest::Approx(0.044).epsilon(1e-10));
    CHECK(find("2 heptagons + square").slack == doctest::Approx(0.0318).epsilon(1e-10));
}

TEST_CASE("jensen consistency for passing curves") {
    const JensenReport ch = h3prime_jensen_check(FunctionalKind::Cheeger, 2.0 / 3.0, 10000);
    CHECK(ch.pass);
    CHECK(ch.samples_run == 10000);
    const JensenReport pe = h3prime_jensen_check(FunctionalKind::Perimeter, -2.0, 10000);
    CHECK(pe.pass);
}

TEST_CASE("jensen equality for the all-six multiset") {
    // {6,6,6}: the mean of phi equals phi(6) exactly.
    const double phi6 = std::pow(cheeger_regular(6), 2.0 / 3.0);
    const double mean = (std::pow(cheeger_regular(6), 2.0 / 3.0) * 3.0) / 3.0;
    CHECK(std::abs(mean - phi6) <= 1e-12 * phi6);
}
