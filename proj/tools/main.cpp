#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "honeycomb/hypothesis.hpp"
#include "honeycomb/io.hpp"
#include "honeycomb/partition.hpp"

using nlohmann::json;
using namespace honeycomb;

namespace {

// Accepts "6.022pi" style constants: a trailing "pi" multiplies by pi.
double parse_pi_constant(const std::string& text) {
    std::string body = text;
    double factor = 1.0;
    if (body.size() > 2 && body.substr(body.size() - 2) == "pi") {
        body = body.substr(0, body.size() - 2);
        factor = M_PI;
    }
    std::size_t used = 0;
    const double v = std::stod(body, &used);
    if (used != body.size()) throw CLI::ValidationError("bad numeric constant: " + text);
    return v * factor;
}

void write_output(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write file: " + out_path);
    out << payload << "\n";
}

ConvexPolygon load_polygon(const std::string& path, double tolerance) {
    return polygon_from_json(parse_json_text(read_text_file(path), path), tolerance);
}

ConvexPolygon default_container(const std::string& omega_path, double tolerance) {
    if (!omega_path.empty()) return load_polygon(omega_path, tolerance);
    return ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, tolerance);
}

Objective parse_objective(const std::string& name) {
    if (name == "sum") return Objective::Sum;
    if (name == "max") return Objective::Max;
    throw CLI::ValidationError("objective must be sum or max");
}

json curve_report_json(const CurveReport& rep) {
    json j;
    j["kind"] = functional_name(rep.kind);
    j["beta"] = rep.beta;
    j["t_min"] = rep.t_min;
    j["t_max"] = rep.t_max;
    j["step"] = rep.step;
    j["expected"] = rep.expect_decreasing ? "decreasing convex" : "increasing concave";
    j["monotone_margin"] = rep.monotone_margin;
    j["convexity_margin"] = rep.convexity_margin;
    j["verdict"] = rep.pass ? "pass" : "fail";
    if (!rep.pass) j["fail_t"] = rep.fail_t;
    return j;
}

json audit_json(const SideAudit& audit) {
    json j;
    j["mean_sides"] = audit.mean_sides;
    j["bound"] = audit.bound;
    j["pass"] = audit.pass;
    j["n_sides"] = audit.n_sides;
    return j;
}

std::vector<int> parse_k_list(const std::string& text) {
    std::vector<int> ks;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) ks.push_back(std::stoi(item));
    }
    if (ks.empty()) throw CLI::ValidationError("empty k list");
    return ks;
}

int run(int argc, char** argv) {
    CLI::App app{"Shape functionals, hexagonal packings, and convex partition bounds"};
    app.require_subcommand(1);
    double tolerance = ConvexPolygon::kDefaultTolerance;
    app.add_option("--tolerance", tolerance, "geometric tolerance override");

    // gamma-table
    auto* gamma_cmd = app.add_subcommand("gamma-table", "gamma(n) table as CSV");
    std::string g_kind = "cheeger", g_out;
    int g_nmax = 12;
    gamma_cmd->add_option("--kind", g_kind, "cheeger|lambda1|logcap|perimeter")->required();
    gamma_cmd->add_option("--n-max", g_nmax, "largest n")->required();
    gamma_cmd->add_option("--out", g_out, "output CSV path");

    // check-h3
    auto* h3_cmd = app.add_subcommand("check-h3", "monotone/convex curve check");
    std::string h3_kind = "cheeger", h3_out;
    double h3_beta = 2.0 / 3.0, h3_tmax = 60.0, h3_step = 0.01;
    h3_cmd->add_option("--kind", h3_kind)->required();
    h3_cmd->add_option("--beta", h3_beta)->required();
    h3_cmd->add_option("--t-max", h3_tmax);
    h3_cmd->add_option("--step", h3_step);
    h3_cmd->add_option("--out", h3_out);

    // verify-appendix
    auto* app_cmd = app.add_subcommand("verify-appendix", "curve convexity and digamma bound checks");
    std::string app_out;
    app_cmd->add_option("--out", app_out);

    // induction
    auto* ind_cmd = app.add_subcommand("induction", "brute-force induction inequality");
    std::string ind_a = "6.022pi", ind_b = "5.82pi", ind_exp = "both", ind_out;
    int ind_kmax = 8, ind_nmax = 12;
    ind_cmd->add_option("--a", ind_a, "gamma(5) lower bound, pi suffix allowed");
    ind_cmd->add_option("--b", ind_b, "gamma(7) lower bound, pi suffix allowed");
    ind_cmd->add_option("--kmax", ind_kmax);
    ind_cmd->add_option("--nmax", ind_nmax);
    ind_cmd->add_option("--exponent", ind_exp, "half|one|both");
    ind_cmd->add_option("--out", ind_out);

    // hex-pack
    auto* pack_cmd = app.add_subcommand("hex-pack", "hexagonal packing upper bound");
    std::string pack_omega, pack_kind = "cheeger", pack_obj = "max", pack_out;
    int pack_k = 100;
    pack_cmd->add_option("--omega", pack_omega, "container polygon JSON")->required();
    pack_cmd->add_option("--k", pack_k)->required();
    pack_cmd->add_option("--kind", pack_kind);
    pack_cmd->add_option("--objective", pack_obj);
    pack_cmd->add_option("--out", pack_out);

    // optimize
    auto* opt_cmd = app.add_subcommand("optimize", "heuristic convex partition search");
    std::string opt_omega, opt_kind = "cheeger", opt_obj = "sum", opt_out;
    int opt_k = 4, opt_iters = 100;
    unsigned opt_seed = 1;
    opt_cmd->add_option("--omega", opt_omega, "container polygon JSON (unit square default)");
    opt_cmd->add_option("--k", opt_k)->required();
    opt_cmd->add_option("--kind", opt_kind);
    opt_cmd->add_option("--objective", opt_obj);
    opt_cmd->add_option("--seed", opt_seed);
    opt_cmd->add_option("--iters", opt_iters);
    opt_cmd->add_option("--out", opt_out, "partition JSON path");

    // euler-audit
    auto* audit_cmd = app.add_subcommand("euler-audit", "mean side count audit");
    std::string audit_partition, audit_out;
    audit_cmd->add_option("--partition", audit_partition, "partition JSON")->required();
    audit_cmd->add_option("--out", audit_out);

    // convergence
    auto* conv_cmd = app.add_subcommand("convergence", "scaled packing bounds vs k");
    std::string conv_kind = "cheeger", conv_obj = "max", conv_ks = "100,1000,10000";
    std::string conv_omega, conv_out;
    conv_cmd->add_option("--kind", conv_kind);
    conv_cmd->add_option("--objective", conv_obj);
    conv_cmd->add_option("--ks", conv_ks, "comma-separated k values");
    conv_cmd->add_option("--omega", conv_omega);
    conv_cmd->add_option("--out", conv_out, "output CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    if (gamma_cmd->parsed()) {
        const auto curve = gamma_curve(functional_from_name(g_kind), g_nmax);
        std::ostringstream csv;
        csv.precision(15);
        csv << "n,gamma,exactness\n";
        for (const GammaPoint& p : curve)
            csv << p.n << "," << p.gamma << "," << exactness_name(p.exactness) << "\n";
        write_output(g_out, csv.str());
        return 0;
    }

    if (h3_cmd->parsed()) {
        const CurveReport rep =
            curve_check(functional_from_name(h3_kind), h3_beta, h3_tmax, h3_step);
        write_output(h3_out, curve_report_json(rep).dump(2));
        return rep.pass ? 0 : 1;
    }

    if (app_cmd->parsed()) {
        json j;
        bool all = true;
        const struct {
            FunctionalKind kind;
            double beta;
        } curves[3] = {{FunctionalKind::Cheeger, 2.0 / 3.0},
                       {FunctionalKind::Cheeger, 2.0},
                       {FunctionalKind::LogCap, -2.0}};
        for (const auto& c : curves) {
            const CurveReport rep = curve_check(c.kind, c.beta, 60.0, 0.01);
            j["curves"].push_back(curve_report_json(rep));
            all = all && rep.pass;
        }
        const SandwichReport sw = digamma_sandwich_scan(1e-3);
        j["digamma"] = {{"pass", sw.pass},
                        {"worst_alpha", sw.worst_alpha},
                        {"worst_slack", sw.worst_slack}};
        all = all && sw.pass;
        j["pass"] = all;
        write_output(app_out, j.dump(2));
        return all ? 0 : 1;
    }

    if (ind_cmd->parsed()) {
        InductionConfig cfg;
        cfg.a = parse_pi_constant(ind_a);
        cfg.b = parse_pi_constant(ind_b);
        cfg.k_max = ind_kmax;
        cfg.n_max = ind_nmax;
        json j;
        bool pass = true;
        auto run_one = [&](InductionExponent e, const char* name) {
            cfg.exponent = e;
            const InductionReport rep = induction_bruteforce(cfg);
            json r{{"pass", rep.pass},
                   {"worst_slack", rep.worst_slack},
                   {"multisets_checked", rep.multisets_checked},
                   {"runtime_seconds", rep.runtime_seconds}};
            if (rep.counterexample) r["counterexample"] = *rep.counterexample;
            j[name] = r;
            pass = pass && rep.pass;
        };
        if (ind_exp == "half" || ind_exp == "both") run_one(InductionExponent::Half, "half");
        if (ind_exp == "one" || ind_exp == "both") run_one(InductionExponent::One, "one");
        if (ind_exp != "half" && ind_exp != "one" && ind_exp != "both")
            throw CLI::ValidationError("exponent must be half, one, or both");
        j["chains"] = json::array();
        for (const ChainLine& l : chain_check()) {
            j["chains"].push_back({{"name", l.name},
                                   {"lhs_sqrt_pi", l.lhs},
                                   {"rhs_sqrt_pi", l.rhs},
                                   {"slack", l.slack},
                                   {"pass", l.pass}});
            pass = pass && l.pass;
        }
        j["pass"] = pass;
        write_output(ind_out, j.dump(2));
        return pass ? 0 : 1;
    }

    if (pack_cmd->parsed()) {
        const ConvexPolygon omega = load_polygon(pack_omega, tolerance);
        const BoundCertificate cert = hex_pack_bound(
            omega, pack_k, functional_from_name(pack_kind), parse_objective(pack_obj));
        json j{{"kind", functional_name(cert.kind)},
               {"k", cert.k},
               {"rho", cert.rho},
               {"reference", hexagon_reference(cert.kind)}};
        if (cert.upper) j["upper"] = *cert.upper;
        if (cert.scaled_upper) j["scaled_upper"] = *cert.scaled_upper;
        write_output(pack_out, j.dump(2));
        return 0;
    }

    if (opt_cmd->parsed()) {
        const ConvexPolygon omega = default_container(opt_omega, tolerance);
        const ConvexPartitionResult part =
            optimize(omega, opt_k, functional_from_name(opt_kind), parse_objective(opt_obj),
                     opt_seed, opt_iters);
        json j = partition_to_json(part);
        j["objective_sum"] = part.objective_sum;
        j["objective_max"] = part.objective_max;
        j["covers"] = part.covers;
        j["converged"] = part.converged;
        write_output(opt_out, j.dump(2));
        return 0;
    }

    if (audit_cmd->parsed()) {
        const PartitionFile f =
            partition_from_json(parse_json_text(read_text_file(audit_partition),
                                                audit_partition),
                                tolerance);
        const SideAudit audit =
            audit_sides_euler(f.cells, measure(f.container).n_sides);
        write_output(audit_out, audit_json(audit).dump(2));
        return audit.pass ? 0 : 1;
    }

    if (conv_cmd->parsed()) {
        const ConvexPolygon omega = default_container(conv_omega, tolerance);
        const auto rows = convergence_run(omega, functional_from_name(conv_kind),
                                          parse_objective(conv_obj), parse_k_list(conv_ks));
        std::ostringstream csv;
        csv.precision(15);
        csv << "k,upper,scaled_upper,reference\n";
        for (const ConvergenceRow& r : rows)
            csv << r.k << "," << r.upper << "," << r.scaled_upper << "," << r.reference
                << "\n";
        write_output(conv_out, csv.str());
        return 0;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidArgument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Unsupported& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
