#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qsdc/cli.hpp"
#include "qsdc/rate.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = qsdc::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / ("qsdc_cli_test_" + name);
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("rate prints the composite rate") {
    const CliResult r = run({"rate", "--p0", "0.5", "--xi", "0.05", "--e", "0.05", "--eta-b", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("r_s = 0.427206\n") != std::string::npos);
    CHECK(r.out.find("I_AB = 0.713603\n") != std::string::npos);
    CHECK(r.out.find("I_AE = 0.286397\n") != std::string::npos);
}

TEST_CASE("simulate emits the flat record and exit code 0") {
    const CliResult r = run({"simulate", "--n-e", "2000", "--seed", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("N_e = 2000\n") != std::string::npos);
    CHECK(r.out.find("N_r = 2000\n") != std::string::npos);
    CHECK(r.out.find("aborted = false\n") != std::string::npos);
    for (const char* key : {"N_e", "N_r", "N", "e_hat_fwd", "e_hat_bwd", "ber", "aborted"})
        CHECK(r.out.find(std::string(key) + " = ") != std::string::npos);
}

TEST_CASE("an aborted run exits with code 2") {
    const CliResult r =
        run({"simulate", "--n-e", "20000", "--p-flip-fwd", "0.30", "--seed", "3"});
    CHECK(r.code == 2);
    CHECK(r.out.find("aborted = true\n") != std::string::npos);
}

TEST_CASE("validation failures exit with code 1") {
    CHECK(run({"simulate", "--check-fraction", "0.7"}).code == 1);
    CHECK(run({"simulate", "--no-such-flag", "1"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"simulate", "--attack", "sneaky"}).code == 1);
    CHECK(run({"scan", "--pa", "0.01", "--pc", "0.03"}).code == 1); // --out required
}

TEST_CASE("help exits cleanly") {
    const CliResult r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("simulate") != std::string::npos);
}

TEST_CASE("scan writes the grid, its boundary, and is deterministic") {
    const fs::path out1 = temp_file("scan1.csv");
    const fs::path out2 = temp_file("scan2.csv");
    const CliResult r1 =
        run({"scan", "--pa", "0.01", "--pc", "0.03", "--steps", "100", "--out", out1.string()});
    const CliResult r2 =
        run({"scan", "--pa", "0.01", "--pc", "0.03", "--steps", "100", "--out", out2.string()});
    REQUIRE(r1.code == 0);
    REQUIRE(r2.code == 0);

    const std::string grid1 = slurp(out1);
    CHECK(grid1 == slurp(out2));
    CHECK(slurp(fs::path(out1.string() + ".boundary.csv")) ==
          slurp(fs::path(out2.string() + ".boundary.csv")));

    // header + 101*101 rows, LF endings
    CHECK(grid1.rfind("eta_E,eta_B,r\n", 0) == 0);
    CHECK(std::count(grid1.begin(), grid1.end(), '\n') == 1 + 101 * 101);
    CHECK(grid1.find('\r') == std::string::npos);

    fs::remove(out1);
    fs::remove(out2);
    fs::remove(fs::path(out1.string() + ".boundary.csv"));
    fs::remove(fs::path(out2.string() + ".boundary.csv"));
}

TEST_CASE("scan CSV round-trips to the in-memory grid") {
    const fs::path out = temp_file("scan_rt.csv");
    REQUIRE(run({"scan", "--pa", "0.01", "--pc", "0.03", "--steps", "25", "--out", out.string()})
                .code == 0);
    const qsdc::ScanResult expect = qsdc::boundary_scan(25, 0.01, 0.03);

    std::ifstream f(out);
    std::string line;
    REQUIRE(std::getline(f, line));
    CHECK(line == "eta_E,eta_B,r");
    std::size_t idx = 0;
    while (std::getline(f, line)) {
        REQUIRE(idx < expect.grid.size());
        double ee, eb, r;
        REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf", &ee, &eb, &r) == 3);
        CHECK(std::abs(ee - expect.grid[idx].eta_e) < 5e-7);
        CHECK(std::abs(eb - expect.grid[idx].eta_b) < 5e-7);
        CHECK(std::abs(r - expect.grid[idx].r) < 5e-7);
        ++idx;
    }
    CHECK(idx == expect.grid.size());

    std::ifstream fb(fs::path(out.string() + ".boundary.csv"));
    REQUIRE(std::getline(fb, line));
    CHECK(line == "eta_B,eta_E_star");
    idx = 0;
    while (std::getline(fb, line)) {
        REQUIRE(idx < expect.boundary.size());
        double eb, star;
        REQUIRE(std::sscanf(line.c_str(), "%lf,%lf", &eb, &star) == 2);
        CHECK(std::abs(star - expect.boundary[idx].eta_e_star) < 5e-7);
        ++idx;
    }
    CHECK(idx == expect.boundary.size());

    fs::remove(out);
    fs::remove(fs::path(out.string() + ".boundary.csv"));
}

TEST_CASE("simulate --out writes the same record it prints") {
    const fs::path out = temp_file("sim.rec");
    const CliResult r =
        run({"simulate", "--n-e", "3000", "--seed", "9", "--out", out.string()});
    REQUIRE(r.code == 0);
    CHECK(slurp(out) == r.out);
    const CliResult again =
        run({"simulate", "--n-e", "3000", "--seed", "9", "--out", out.string()});
    CHECK(again.out == r.out); // same seed, byte-identical
    fs::remove(out);
}

TEST_CASE("attack-bench reports zero gap on the fixture family") {
    const CliResult r = run({"attack-bench", "--theta-steps", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("identity,0.000000,0.000000,1.000000,1.000000,0.000000") != std::string::npos);
    CHECK(r.out.find("cnot,0.250000,0.500000,0.000000,0.000000,0.000000") != std::string::npos);
}

TEST_CASE("code-check runs both experiments") {
    const CliResult sh = run({"code-check", "--experiment", "shannon", "--n", "12", "--code-rate",
                              "0.25", "--p1", "0.0", "--eta", "0.0", "--trials", "1000"});
    CHECK(sh.code == 0);
    CHECK(sh.out.find("success_rate = 1.000000\n") != std::string::npos);

    const CliResult eve = run({"code-check", "--experiment", "eve", "--n", "12", "--eta-e", "1.0",
                               "--eta-b", "0.0", "--trials", "200"});
    CHECK(eve.code == 0);
    CHECK(eve.out.find("eve_list_exponent = ") != std::string::npos);
    CHECK(eve.out.find("cond_reliable = true") != std::string::npos);
}

TEST_CASE("config files feed defaults, flags override them") {
    const fs::path cfg = temp_file("rate.cfg");
    {
        std::ofstream f(cfg);
        f << "p0=0.5\nxi=0.05\ne=0.05\neta-b=0\n";
    }
    const CliResult from_file = run({"rate", "--config", cfg.string()});
    CHECK(from_file.code == 0);
    CHECK(from_file.out.find("r_s = 0.427206\n") != std::string::npos);

    const CliResult overridden = run({"rate", "--config", cfg.string(), "--xi", "0"});
    CHECK(overridden.code == 0);
    CHECK(overridden.out.find("r_s = 0.713603\n") != std::string::npos);
    fs::remove(cfg);
}

TEST_CASE("config files with unknown keys are rejected") {
    const fs::path cfg = temp_file("bad.cfg");
    {
        std::ofstream f(cfg);
        f << "xi=0.05\nwibble=3\n";
    }
    const CliResult r = run({"rate", "--config", cfg.string()});
    CHECK(r.code == 1);
    CHECK(run({"rate", "--config", temp_file("nonexistent.cfg").string()}).code == 1);
    fs::remove(cfg);
}

} // TEST_SUITE
