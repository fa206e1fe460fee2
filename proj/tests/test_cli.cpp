#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "qwc/asymptotics.hpp"
#include "qwc/cli/commands.hpp"
#include "qwc/cli/output.hpp"

using namespace qwc;
using namespace qwc::cli;
using Catch::Matchers::WithinAbs;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "qwc");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            cells.push_back(cell);
        }
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST_CASE("coin specs") {
    const auto h = parse_coin("hadamard");
    CHECK(h.theta().pi_fraction() == PiFraction{1, 4});

    const auto d = parse_coin("diaz:pi/3");
    CHECK(d.theta().pi_fraction() == PiFraction{1, 3});
    CHECK(d.zeta().pi_fraction() == PiFraction{-1, 2});
    CHECK(d.eta().pi_fraction() == PiFraction{1, 1});

    const auto u = parse_coin("u2:pi/4,pi/3,0");
    CHECK(u.zeta().pi_fraction() == PiFraction{1, 3});
    CHECK(u.eta().pi_fraction() == PiFraction{0, 1});
    const auto u4 = parse_coin("u2:0.1,0.2,0.3,0.4");
    CHECK_THAT(u4.eta().radians(), WithinAbs(0.4, 0.0));

    CHECK_THROWS_AS(parse_coin("grover"), ConfigError);
    CHECK_THROWS_AS(parse_coin("u2:1,2"), ConfigError);
    CHECK_THROWS_AS(parse_coin("u2:1,2,x"), ConfigError);
    CHECK_THROWS_AS(parse_coin("diaz:"), ConfigError);

    const auto round = parse_coin(format_coin(u));
    CHECK(round.zeta().pi_fraction() == u.zeta().pi_fraction());
    CHECK(round.theta().pi_fraction() == u.theta().pi_fraction());
    const auto round4 = parse_coin(format_coin(u4));
    CHECK(round4.xi().radians() == u4.xi().radians());
}

TEST_CASE("axis and format specs") {
    const auto a = parse_axis("0:pi:11", "gamma");
    CHECK(a.name == "gamma");
    CHECK(a.n == 11);
    CHECK_THAT(a.hi, WithinAbs(std::numbers::pi, 1e-15));
    CHECK_THAT(parse_axis("-pi:pi:3", "zeta").lo, WithinAbs(-std::numbers::pi, 1e-15));
    CHECK_THAT(parse_axis("0:2pi:3", "phi").hi, WithinAbs(2 * std::numbers::pi, 1e-15));
    CHECK_THROWS_AS(parse_axis("0:1", "x"), ConfigError);
    CHECK_THROWS_AS(parse_axis("0:1:0", "x"), ConfigError);
    CHECK_THROWS_AS(parse_axis("0:1:2.5", "x"), ConfigError);
    CHECK(parse_format("json") == OutputFormat::json);
    CHECK_THROWS_AS(parse_format("xml"), ConfigError);
    CHECK(parse_scan("phase") == ScanKind::phase);
    CHECK_THROWS_AS(parse_scan("grid"), ConfigError);
}

TEST_CASE("format_real") {
    CHECK(format_real(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(format_real(0.1) == "0.10000000000000001");
    CHECK(std::stod(format_real(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("ld on an odd cycle is uniform") {
    const auto r = invoke({"ld", "-N", "5", "--coin", "hadamard", "--init", "local:0"});
    REQUIRE(r.code == kExitOk);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == std::vector<std::string>{"v", "pi_v"});
    for (std::size_t v = 1; v < rows.size(); ++v) {
        REQUIRE_THAT(std::stod(rows[v][1]), WithinAbs(0.2, 1e-15));
    }
}

TEST_CASE("ld without degeneracy is uniform") {
    const auto r = invoke({"ld", "-N", "8", "--coin", "u2:pi/4,pi/3,0"});
    REQUIRE(r.code == kExitOk);
    const auto rows = csv_rows(r.out);
    for (std::size_t v = 1; v < rows.size(); ++v) {
        REQUIRE(std::stod(rows[v][1]) == 0.125);
    }
}

TEST_CASE("ld JSON round trips exactly") {
    const auto r = invoke({"ld", "-N", "60", "--init", "entangled:20", "--format", "json"});
    REQUIRE(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    const auto probs = j["distribution"].get<std::vector<double>>();
    const auto ld = asymptotics::limiting_distribution(make_state(EntangledPairSpec{20}, 60), hadamard_params());
    REQUIRE(probs.size() == 60);
    for (std::size_t v = 0; v < 60; ++v) {
        REQUIRE(probs[v] == ld[v]);
    }
}

TEST_CASE("CSV values are full precision") {
    const auto r = invoke({"ld", "-N", "6"});
    const auto rows = csv_rows(r.out);
    const auto ld = asymptotics::hadamard_local_ld(6);
    for (std::size_t v = 0; v < 6; ++v) {
        REQUIRE_THAT(std::stod(rows[v + 1][1]), WithinAbs(ld[v], 1e-15));
    }
}

TEST_CASE("rdcm and simulate agree") {
    const auto a = invoke({"rdcm", "-N", "4", "--init", "local:0"});
    const auto b = invoke({"simulate", "-N", "4", "--init", "local:0", "--reduce", "--tmax", "100000"});
    REQUIRE(a.code == kExitOk);
    REQUIRE(b.code == kExitOk);
    const auto ra = csv_rows(a.out);
    const auto rb = csv_rows(b.out);
    REQUIRE(ra.size() == 5);
    CHECK(ra[0] == std::vector<std::string>{"row", "col", "re", "im"});
    for (std::size_t i = 1; i < 5; ++i) {
        REQUIRE_THAT(std::stod(ra[i][2]), WithinAbs(std::stod(rb[i][2]), 1e-2));
        REQUIRE_THAT(std::stod(ra[i][3]), WithinAbs(std::stod(rb[i][3]), 1e-2));
    }

    const auto diag = csv_rows(invoke({"rdcm", "-N", "5", "--coin", "u2:0,0,0"}).out);
    CHECK_THAT(std::stod(diag[1][2]), WithinAbs(1.0, 1e-14));
    CHECK_THAT(std::stod(diag[4][2]), WithinAbs(0.0, 1e-14));

    const auto bloch = csv_rows(invoke({"rdcm", "-N", "100", "--init", "bloch:pi,0"}).out);
    CHECK_THAT(std::stod(bloch[1][2]) + std::stod(bloch[4][2]), WithinAbs(1.0, 1e-10));
}

TEST_CASE("simulate") {
    const auto one = csv_rows(invoke({"simulate", "-N", "5", "--coin", "u2:0,0,0", "--tmax", "1"}).out);
    CHECK(std::stod(one[2][1]) == 1.0);  // node 1
    CHECK(std::stod(one[1][1]) == 0.0);

    const auto sim = invoke({"simulate", "-N", "6", "--tmax", "200000"});
    const auto ld = csv_rows(invoke({"ld", "-N", "6"}).out);
    const auto rows = csv_rows(sim.out);
    double total = 0.0;
    for (std::size_t v = 1; v <= 6; ++v) {
        REQUIRE_THAT(std::stod(rows[v][1]), WithinAbs(std::stod(ld[v][1]), 1e-2));
        total += std::stod(rows[v][1]);
    }
    CHECK_THAT(total, WithinAbs(1.0, 1e-10));
}

TEST_CASE("temp") {
    const auto single = csv_rows(invoke({"temp", "-N", "100", "--init", "bloch:pi,0"}).out);
    REQUIRE(single.size() == 2);
    CHECK(single[0] == std::vector<std::string>{"lambda1", "lambda2", "temperature"});

    const auto mixed = csv_rows(invoke({"temp", "-N", "100", "--init", "bloch:pi/4,pi"}).out);
    CHECK(mixed[1][2] == "inf");

    const auto scan = invoke({"temp", "-N", "100", "--scan", "bloch", "--axis1", "pi:pi:1", "--axis2", "0:0:1"});
    const auto rows = csv_rows(scan.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == std::vector<std::string>{"gamma", "phi", "ratio"});
    CHECK(std::stod(rows[1][2]) == 1.0);

    const auto phase = invoke({"temp", "-N", "100", "--scan", "phase", "--init", "bloch:pi/4,0", "--axis1",
                               "-pi:pi:5", "--axis2", "-pi:pi:5", "--format", "json"});
    REQUIRE(phase.code == kExitOk);
    const auto j = nlohmann::json::parse(phase.out);
    CHECK(j["axis1"]["name"] == "zeta");
    REQUIRE(j["ratios"].size() == 5);
    for (int i = 0; i < 5; ++i) {
        REQUIRE_THAT(j["ratios"][i][i].get<double>(), WithinAbs(1.0, 1e-9));
    }
    bool saw_inf = false;
    for (const auto& row : j["ratios"]) {
        for (const auto& x : row) {
            saw_inf = saw_inf || (x.is_string() && x.get<std::string>() == "inf");
        }
    }
    CHECK(saw_inf);
}

TEST_CASE("exit codes for bad configurations") {
    CHECK(invoke({}).code == kExitBadConfig);
    CHECK(invoke({"ld"}).code == kExitBadConfig);
    CHECK(invoke({"ld", "-N", "0"}).code == kExitBadConfig);
    CHECK(invoke({"ld", "-N", "4", "--coin", "nope"}).code == kExitBadConfig);
    CHECK(invoke({"ld", "-N", "4", "--init", "local:9"}).code == kExitBadConfig);
    CHECK(invoke({"ld", "-N", "4", "--init", "entangled:4"}).code == kExitBadConfig);
    CHECK(invoke({"ld", "-N", "4", "--format", "yaml"}).code == kExitBadConfig);
    CHECK(invoke({"simulate", "-N", "4", "--tmax", "0"}).code == kExitBadConfig);
    CHECK(invoke({"temp", "-N", "4", "--e0", "-1"}).code == kExitBadConfig);
    CHECK(invoke({"temp", "-N", "4", "--scan", "bloch", "--axis1", "0:1"}).code == kExitBadConfig);
    const auto r = invoke({"ld", "-N", "4", "--coin", "u2:1,2"});
    CHECK(r.err.find("u2") != std::string::npos);
    CHECK(r.out.empty());
    CHECK(invoke({"--help"}).code == kExitOk);
}

TEST_CASE("output files are deterministic") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto p1 = (dir / "qwc_cli_a.csv").string();
    const auto p2 = (dir / "qwc_cli_b.csv").string();
    REQUIRE(invoke({"ld", "-N", "62", "--init", "separable:22", "--out", p1}).code == kExitOk);
    REQUIRE(invoke({"ld", "-N", "62", "--init", "separable:22", "--out", p2}).code == kExitOk);
    auto slurp = [](const std::string& p) {
        std::ifstream f(p, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(f), {});
    };
    CHECK(slurp(p1) == slurp(p2));
    CHECK(slurp(p1).rfind("v,pi_v\n", 0) == 0);
    std::filesystem::remove(p1);
    std::filesystem::remove(p2);
    CHECK(invoke({"ld", "-N", "4", "--out", "/nonexistent-dir/x.csv"}).code == kExitBadConfig);
}

TEST_CASE("verify is reproducible and fails on short windows") {
    VerifyOptions o;
    o.n_min = 3;
    o.n_max = 5;
    o.coins_per_n = 2;
    o.states_per_coin = 2;
    o.t_max = 20000;
    const auto a = run_verify(o);
    const auto b = run_verify(o);
    CHECK(describe(a) == describe(b));
    CHECK(a.cases.size() == 12);
    CHECK(a.passed());
    CHECK(a.degenerate_coins >= 3);

    o.t_max = 10;
    const auto bad = run_verify(o);
    CHECK_FALSE(bad.passed());
    CHECK(describe(bad).find("FAIL N=") != std::string::npos);

    const auto r = invoke({"verify", "--nmin", "3", "--nmax", "4", "--instances", "2", "--states", "1", "--tmax",
                           "10"});
    CHECK(r.code == kExitVerifyFailed);
    CHECK(invoke({"verify", "--nmin", "5", "--nmax", "3"}).code == kExitBadConfig);
}
