#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <fstream>
#include <sstream>
#include <string>

#include "honeycomb/io.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    const std::string out_path = "cli_stdout.tmp";
    const std::string err_path = "cli_stderr.tmp";
    const std::string cmd =
        std::string(CLI_BINARY) + " " + args + " >" + out_path + " 2>" + err_path;
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

} // namespace

TEST_CASE("gamma-table emits the square row") {
    const RunResult r = run_cli("gamma-table --kind perimeter --n-max 12");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("n,gamma,exactness") != std::string::npos);
    CHECK(r.out.find("4,4,exact") != std::string::npos);
}

TEST_CASE("check-h3 passes for the cheeger curve") {
    const RunResult r = run_cli("check-h3 --kind cheeger --beta 0.6666666666666666 --t-max 20");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"verdict\": \"pass\"") != std::string::npos);
}

TEST_CASE("induction negative control exits 1 with a counterexample") {
    const RunResult r = run_cli("induction --a 5.783pi --b 5.783pi --exponent half");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("counterexample") != std::string::npos);
}

TEST_CASE("induction defaults pass") {
    const RunResult r = run_cli("induction");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("unknown flags are usage errors") {
    const RunResult r = run_cli("gamma-table --kind perimeter --n-max 12 --bogus 1");
    CHECK(r.exit_code == 2);
}

TEST_CASE("malformed polygon json exits 2 with a diagnostic") {
    {
        std::ofstream f("bad_omega.json");
        f << "{\n  \"vertices\": [[0,0],\n  oops\n}\n";
    }
    const RunResult r = run_cli("hex-pack --omega bad_omega.json --k 5");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("line 3") != std::string::npos);
    CHECK(r.err.find("column") != std::string::npos);
    std::remove("bad_omega.json");
}

TEST_CASE("optimize then euler-audit round trip") {
    const RunResult opt = run_cli(
        "optimize --k 6 --kind cheeger --objective sum --seed 7 --iters 40 --out part.json");
    REQUIRE(opt.exit_code == 0);
    const RunResult audit = run_cli("euler-audit --partition part.json");
    CHECK(audit.exit_code == 0);
    CHECK(audit.out.find("\"pass\": true") != std::string::npos);
    std::remove("part.json");
}

TEST_CASE("hex-pack reads a polygon file") {
    {
        std::ofstream f("omega_sq.json");
        f << honeycomb::polygon_to_json(
                 honeycomb::ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}))
                 .dump();
    }
    const RunResult r = run_cli("hex-pack --omega omega_sq.json --k 50 --kind cheeger "
                                "--objective max");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("scaled_upper") != std::string::npos);
    std::remove("omega_sq.json");
}

TEST_CASE("convergence emits csv rows") {
    const RunResult r = run_cli("convergence --kind perimeter --ks 10,50 --objective max");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("k,upper,scaled_upper,reference") != std::string::npos);
    CHECK(r.out.find("\n10,") != std::string::npos);
    CHECK(r.out.find("\n50,") != std::string::npos);
}

TEST_CASE("verify-appendix reports three curve passes") {
    const RunResult r = run_cli("verify-appendix");
    CHECK(r.exit_code == 0);
    std::size_t count = 0, at = 0;
    while ((at = r.out.find("\"verdict\": \"pass\"", at)) != std::string::npos) {
        ++count;
        ++at;
    }
    CHECK(count == 3);
    CHECK(r.out.find("\"digamma\"") != std::string::npos);
}

TEST_CASE("optimize output is byte-identical across runs") {
    const std::string flags =
        "optimize --k 4 --kind perimeter --objective max --seed 5 --iters 25 --out ";
    REQUIRE(run_cli(flags + "p1.json").exit_code == 0);
    REQUIRE(run_cli(flags + "p2.json").exit_code == 0);
    CHECK(slurp("p1.json") == slurp("p2.json"));
    std::remove("p1.json");
    std::remove("p2.json");
}

TEST_CASE("check-h3 on lambda1 is reported as unsupported") {
    const RunResult r = run_cli("check-h3 --kind lambda1 --beta 0.5");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("unsupported") != std::string::npos);
}
