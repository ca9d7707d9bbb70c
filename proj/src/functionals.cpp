#include "honeycomb/functionals.hpp"

#include <cmath>

#include "honeycomb/fem.hpp"
#include "honeycomb/specfun.hpp"

namespace honeycomb {

double functional_alpha(FunctionalKind kind) {
    switch (kind) {
        case FunctionalKind::Lambda1: return 2.0;
        case FunctionalKind::Cheeger:
        case FunctionalKind::LogCap:
        case FunctionalKind::Perimeter: return 1.0;
    }
    throw InvalidArgument("unknown functional kind");
}

Direction functional_direction(FunctionalKind kind) {
    switch (kind) {
        case FunctionalKind::Cheeger:
        case FunctionalKind::Lambda1: return Direction::Decreasing;
        case FunctionalKind::LogCap:
        case FunctionalKind::Perimeter: return Direction::Increasing;
    }
    throw InvalidArgument("unknown functional kind");
}

std::string functional_name(FunctionalKind kind) {
    switch (kind) {
        case FunctionalKind::Cheeger: return "cheeger";
        case FunctionalKind::Lambda1: return "lambda1";
        case FunctionalKind::LogCap: return "logcap";
        case FunctionalKind::Perimeter: return "perimeter";
    }
    throw InvalidArgument("unknown functional kind");
}

FunctionalKind functional_from_name(const std::string& name) {
    if (name == "cheeger") return FunctionalKind::Cheeger;
    if (name == "lambda1") return FunctionalKind::Lambda1;
    if (name == "logcap") return FunctionalKind::LogCap;
    if (name == "perimeter") return FunctionalKind::Perimeter;
    throw InvalidArgument("unknown functional: " + name);
}

double cheeger_regular_real(double t) {
    if (!(t >= 3.0)) throw InvalidArgument("cheeger formula needs t >= 3");
    const double s2 = 2.0 * t * std::sin(2.0 * M_PI / t);
    return (2.0 * t * std::sin(M_PI / t) + std::sqrt(M_PI * s2)) / std::sqrt(s2);
}

double cheeger_regular(int n) {
    if (n < 3) throw InvalidArgument("regular polygon needs n >= 3");
    return cheeger_regular_real(static_cast<double>(n));
}

double logcap_regular_real(double t) {
    if (!(t >= 3.0)) throw InvalidArgument("logcap formula needs t >= 3");
    const double inv = 1.0 / t;
    return std::sqrt(t * std::tan(M_PI / t)) * gamma_fn(1.0 + inv) /
           (std::sqrt(M_PI) * std::pow(2.0, 2.0 * inv) * gamma_fn(0.5 + inv));
}

double logcap_regular(int n) {
    if (n < 3) throw InvalidArgument("regular polygon needs n >= 3");
    return logcap_regular_real(static_cast<double>(n));
}

double perimeter_regular_real(double t) {
    if (!(t >= 3.0)) throw InvalidArgument("perimeter formula needs t >= 3");
    return 2.0 * std::sqrt(t * std::tan(M_PI / t));
}

double perimeter_regular(int n) {
    if (n < 3) throw InvalidArgument("regular polygon needs n >= 3");
    return perimeter_regular_real(static_cast<double>(n));
}

double lambda1_ball() {
    static const double j01 = bessel_j0_zero1();
    return M_PI * j01 * j01;
}

FunctionalValue cheeger_convex(const ConvexPolygon& poly) {
    // t* solves |P_{-t}| = pi t^2; the left side is decreasing in t,
    // the right side increasing, and they cross once in (0, inradius).
    double lo = 0.0;
    double hi = inradius(poly);
    if (!(inner_parallel_area(poly, 0.0) > 0.0) ||
        inner_parallel_area(poly, hi) - M_PI * hi * hi > 0.0)
        throw SolverFailure("inner Cheeger equation not bracketed");
    while (hi - lo > 1e-10 * hi) {
        const double mid = 0.5 * (lo + hi);
        const double f = inner_parallel_area(poly, mid) - M_PI * mid * mid;
        (f > 0.0 ? lo : hi) = mid;
    }
    const double t_star = 0.5 * (lo + hi);

    FunctionalValue out;
    out.value = 1.0 / t_star;
    out.kind = FunctionalKind::Cheeger;
    out.method = EvalMethod::InnerCheegerSolver;

    // Ball lower bound h >= 2 sqrt(pi / area); fails only on solver bugs.
    if (out.value < 2.0 * std::sqrt(M_PI / poly.area()) * (1.0 - 1e-9))
        throw SolverFailure("cheeger value below the ball lower bound");
    return out;
}

FunctionalValue lambda1_fem(const ConvexPolygon& poly, double h_target) {
    const EigenResult r = dirichlet_lambda1(poly, h_target);
    FunctionalValue out;
    out.value = r.lambda1;
    out.kind = FunctionalKind::Lambda1;
    out.method = EvalMethod::Fem;
    out.fem_h = r.mesh_h;
    return out;
}

int detect_regular(const ConvexPolygon& poly, double rel_tol) {
    const auto& v = poly.vertices();
    const std::size_t n = v.size();
    if (n < 3) return 0;
    const Point2 c = poly.centroid();
    const double r0 = dist(v[0], c);
    const double s0 = dist(v[0], v[1]);
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(dist(v[i], c) - r0) > rel_tol * r0) return 0;
        if (std::abs(dist(v[i], v[(i + 1) % n]) - s0) > rel_tol * s0) return 0;
    }
    return static_cast<int>(n);
}

FunctionalValue evaluate(FunctionalKind kind, const ConvexPolygon& poly) {
    return evaluate(kind, poly, 0.02 * std::sqrt(poly.area()));
}

FunctionalValue evaluate(FunctionalKind kind, const ConvexPolygon& poly, double lambda1_h) {
    switch (kind) {
        case FunctionalKind::Cheeger: return cheeger_convex(poly);
        case FunctionalKind::Lambda1: return lambda1_fem(poly, lambda1_h);
        case FunctionalKind::Perimeter: {
            FunctionalValue out;
            out.value = poly.perimeter();
            out.kind = kind;
            out.method = EvalMethod::ClosedForm;
            return out;
        }
        case FunctionalKind::LogCap: {
            const int n = detect_regular(poly, 1e-9);
            if (n == 0)
                throw Unsupported("logcap is only evaluated on regular polygons");
            FunctionalValue out;
            // Degree-1 homogeneity: LogCap(t P*) = t LogCap(P*), t = sqrt(area).
            out.value = logcap_regular(n) * std::sqrt(poly.area());
            out.kind = kind;
            out.method = EvalMethod::ClosedForm;
            return out;
        }
    }
    throw InvalidArgument("unknown functional kind");
}

std::string exactness_name(Exactness e) {
    switch (e) {
        case Exactness::Exact: return "exact";
        case Exactness::LowerBound: return "lower_bound";
        case Exactness::UpperBound: return "upper_bound";
    }
    return "?";
}

std::vector<GammaPoint> gamma_curve(FunctionalKind kind, int n_max) {
    if (n_max < 6) throw InvalidArgument("gamma curve needs n_max >= 6");
    std::vector<GammaPoint> out;
    out.reserve(static_cast<std::size_t>(n_max) - 2);
    if (kind != FunctionalKind::Lambda1) {
        for (int n = 3; n <= n_max; ++n) {
            double g = 0.0;
            switch (kind) {
                case FunctionalKind::Cheeger: g = cheeger_regular(n); break;
                case FunctionalKind::LogCap: g = logcap_regular(n); break;
                case FunctionalKind::Perimeter: g = perimeter_regular(n); break;
                default: break;
            }
            out.push_back({n, g, Exactness::Exact});
        }
        return out;
    }

    // Lambda1: exact values exist only for triangles and quadrilaterals.
    // The hexagon resolution keeps the upper bound below 2.433^2 pi.
    static const double lambda1_hex = [] {
        return lambda1_fem(regular_polygon(6, 1.0), 0.012).value;
    }();
    for (int n = 3; n <= n_max; ++n) {
        GammaPoint p;
        p.n = n;
        if (n == 3) {
            p.gamma = 4.0 * M_PI * M_PI / std::sqrt(3.0);
            p.exactness = Exactness::Exact;
        } else if (n == 4) {
            p.gamma = 2.0 * M_PI * M_PI;
            p.exactness = Exactness::Exact;
        } else if (n == 5) {
            p.gamma = kDefaultGamma5OverPi * M_PI;
            p.exactness = Exactness::LowerBound;
        } else if (n == 6) {
            p.gamma = lambda1_hex;
            p.exactness = Exactness::UpperBound;
        } else if (n == 7) {
            p.gamma = kDefaultGamma7OverPi * M_PI;
            p.exactness = Exactness::LowerBound;
        } else {
            p.gamma = lambda1_ball();
            p.exactness = Exactness::LowerBound;
        }
        out.push_back(p);
    }
    return out;
}

} // namespace honeycomb
