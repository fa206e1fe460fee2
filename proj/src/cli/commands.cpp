#include "qwc/cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "qwc/asymptotics.hpp"
#include "qwc/cli/output.hpp"
#include "qwc/oracle.hpp"
#include "qwc/thermo.hpp"

namespace qwc::cli {

namespace {

void require_nodes(const RunConfig& cfg) {
    if (cfg.n_nodes == 0) {
        throw ConfigError("-N must be at least 1");
    }
}

WalkState initial_state(const RunConfig& cfg) {
    require_nodes(cfg);
    try {
        return make_state(cfg.init, cfg.n_nodes);
    } catch (const std::exception& e) {
        throw ConfigError("initial state '" + cfg.init_text + "': " + e.what());
    }
}

// Raw option strings, converted to a RunConfig once parsing succeeds.
struct RawOptions {
    std::size_t n_nodes = 0;
    std::string coin = "hadamard";
    std::string init = "local:0";
    std::string out;
    std::string format = "csv";
    std::uint64_t seed = 20240601;
    double e0 = 1.0;
    std::uint64_t t_max = 200000;
    bool reduce = false;
    std::string scan = "none";
    std::string theta = "pi/4";
    std::string axis1;
    std::string axis2;
};

RunConfig to_config(const RawOptions& r) {
    RunConfig c;
    c.n_nodes = r.n_nodes;
    c.coin_text = r.coin;
    c.coin = parse_coin(r.coin);
    c.init_text = r.init;
    try {
        c.init = parse_initial_state(r.init);
    } catch (const std::exception& e) {
        throw ConfigError("initial state '" + r.init + "': " + e.what());
    }
    if (!r.out.empty()) {
        c.out = r.out;
    }
    c.format = parse_format(r.format);
    c.seed = r.seed;
    if (!(r.e0 > 0.0) || !std::isfinite(r.e0)) {
        throw ConfigError("--e0 must be positive");
    }
    c.e0 = r.e0;
    if (r.t_max == 0) {
        throw ConfigError("--tmax must be at least 1");
    }
    c.t_max = r.t_max;
    c.reduce = r.reduce;
    c.scan = parse_scan(r.scan);
    try {
        c.scan_theta = parse_angle(r.theta);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("--theta: ") + e.what());
    }
    const bool phase = c.scan == ScanKind::phase;
    if (!r.axis1.empty()) {
        c.axis1 = parse_axis(r.axis1, phase ? "zeta" : "gamma");
    }
    if (!r.axis2.empty()) {
        c.axis2 = parse_axis(r.axis2, phase ? "xi" : "phi");
    }
    return c;
}

void add_common(CLI::App* sub, RawOptions& r, bool needs_nodes) {
    auto* n = sub->add_option("-N,--nodes", r.n_nodes, "Number of cycle nodes");
    if (needs_nodes) {
        n->required();
    }
    sub->add_option("--coin", r.coin, "hadamard | diaz:THETA | u2:THETA,ZETA,XI[,ETA]")->capture_default_str();
    sub->add_option("--init", r.init, "local:J[,c0re,c0im,c1re,c1im] | bloch:G,P[@J] | entangled:P | "
                                      "separable:P | raw:@FILE")
        ->capture_default_str();
    sub->add_option("--out", r.out, "Output file (default: standard output)");
    sub->add_option("--format", r.format, "csv | json")->capture_default_str();
    sub->add_option("--seed", r.seed, "RNG seed")->capture_default_str();
    sub->add_option("--e0", r.e0, "Energy scale E0")->capture_default_str();
    sub->add_option("--tmax", r.t_max, "Averaging window for brute-force runs")->capture_default_str();
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (!cfg.out) {
        out << text;
        return;
    }
    std::ofstream f(*cfg.out, std::ios::binary);
    if (!f) {
        throw ConfigError("cannot open output file '" + *cfg.out + "'");
    }
    f << text;
    if (!f) {
        throw ConfigError("failed writing '" + *cfg.out + "'");
    }
}

}  // namespace

void cmd_ld(const RunConfig& cfg, std::ostream& os) {
    const WalkState s = initial_state(cfg);
    write_distribution(os, asymptotics::limiting_distribution(s, cfg.coin), cfg.format);
}

void cmd_rdcm(const RunConfig& cfg, std::ostream& os) {
    const WalkState s = initial_state(cfg);
    write_reduced_density(os, asymptotics::asymptotic_reduced_density(s, cfg.coin), cfg.format);
}

void cmd_simulate(const RunConfig& cfg, std::ostream& os) {
    const WalkState s = initial_state(cfg);
    const auto avg = oracle::time_averages(s, build_coin(cfg.coin), cfg.t_max);
    if (cfg.reduce) {
        write_reduced_density(os, avg.reduced, cfg.format);
    } else {
        write_distribution(os, avg.distribution, cfg.format);
    }
}

void cmd_temp(const RunConfig& cfg, std::ostream& os) {
    require_nodes(cfg);
    switch (cfg.scan) {
        case ScanKind::none: {
            const WalkState s = initial_state(cfg);
            const auto rho = asymptotics::asymptotic_reduced_density(s, cfg.coin);
            write_temperature(os, thermo::entanglement_temperature(rho, cfg.e0), cfg.format);
            return;
        }
        case ScanKind::bloch: {
            const auto g = thermo::bloch_temperature_scan(cfg.coin, cfg.n_nodes,
                                                          cfg.axis1.value_or(thermo::default_gamma_axis()),
                                                          cfg.axis2.value_or(thermo::default_phi_axis()), cfg.e0);
            write_scan(os, g, cfg.format);
            return;
        }
        case ScanKind::phase: {
            const auto g = thermo::coin_phase_temperature_scan(
                cfg.scan_theta, cfg.init, cfg.n_nodes, cfg.axis1.value_or(thermo::default_zeta_axis()),
                cfg.axis2.value_or(thermo::default_xi_axis()), cfg.e0);
            write_scan(os, g, cfg.format);
            return;
        }
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact asymptotics of coined quantum walks on cycles", "qwc"};
    app.require_subcommand(1);

    RawOptions ld_opts, rdcm_opts, sim_opts, temp_opts;
    auto* ld = app.add_subcommand("ld", "Limiting position distribution");
    add_common(ld, ld_opts, true);
    auto* rdcm = app.add_subcommand("rdcm", "Asymptotic reduced coin density matrix");
    add_common(rdcm, rdcm_opts, true);
    auto* sim = app.add_subcommand("simulate", "Brute-force finite-time averages");
    add_common(sim, sim_opts, true);
    sim->add_flag("--reduce", sim_opts.reduce, "Emit the reduced coin density instead of the distribution");
    auto* temp = app.add_subcommand("temp", "Entanglement temperature and T/T0 scans");
    add_common(temp, temp_opts, true);
    temp->add_option("--scan", temp_opts.scan, "none | bloch | phase")->capture_default_str();
    temp->add_option("--theta", temp_opts.theta, "Coin angle for phase scans")->capture_default_str();
    temp->add_option("--axis1", temp_opts.axis1, "LO:HI:N for gamma (bloch) or zeta (phase)");
    temp->add_option("--axis2", temp_opts.axis2, "LO:HI:N for phi (bloch) or xi (phase)");

    auto* verify = app.add_subcommand("verify", "Closed forms against brute-force averages");
    VerifyOptions vo;
    std::string verify_out;
    std::size_t n_min = vo.n_min, n_max = vo.n_max;
    verify->add_option("--seed", vo.seed, "RNG seed")->capture_default_str();
    verify->add_option("--instances", vo.coins_per_n, "Random coins per N")->capture_default_str();
    verify->add_option("--states", vo.states_per_coin, "Random initial states per coin")->capture_default_str();
    verify->add_option("--tmax", vo.t_max, "Averaging window")->capture_default_str();
    verify->add_option("--nmin", n_min, "Smallest N")->capture_default_str();
    verify->add_option("--nmax", n_max, "Largest N")->capture_default_str();
    verify->add_option("--tolerance", vo.tolerance, "Max-norm tolerance")->capture_default_str();
    verify->add_option("--out", verify_out, "Report file (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "qwc: " << e.what() << '\n';
        return kExitBadConfig;
    }

    try {
        if (verify->parsed()) {
            vo.n_min = n_min;
            vo.n_max = n_max;
            const auto report = run_verify(vo);
            RunConfig cfg;
            if (!verify_out.empty()) {
                cfg.out = verify_out;
            }
            emit(cfg, describe(report), out);
            return report.passed() ? kExitOk : kExitVerifyFailed;
        }
        std::ostringstream buf;
        RunConfig cfg;
        if (ld->parsed()) {
            cfg = to_config(ld_opts);
            cmd_ld(cfg, buf);
        } else if (rdcm->parsed()) {
            cfg = to_config(rdcm_opts);
            cmd_rdcm(cfg, buf);
        } else if (sim->parsed()) {
            cfg = to_config(sim_opts);
            cmd_simulate(cfg, buf);
        } else {
            cfg = to_config(temp_opts);
            cmd_temp(cfg, buf);
        }
        emit(cfg, buf.str(), out);
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        err << "qwc: invalid configuration: " << e.what() << '\n';
        return kExitBadConfig;
    } catch (const std::out_of_range& e) {
        err << "qwc: invalid configuration: " << e.what() << '\n';
        return kExitBadConfig;
    } catch (const std::exception& e) {
        err << "qwc: error: " << e.what() << '\n';
        return kExitBadConfig;
    }
}

}  // namespace qwc::cli
