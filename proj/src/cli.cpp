#include "qsdc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qsdc/attack.hpp"
#include "qsdc/coding.hpp"
#include "qsdc/protocol.hpp"
#include "qsdc/rate.hpp"

namespace qsdc {

namespace {

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// Flat key=value config support. Values fill in flags the command line left
// unset; explicit flags always win. Returns false (with a message) on an
// unreadable or malformed file. Keys are long option names without dashes.
bool expand_config(std::vector<std::string>& args, std::string& error) {
    std::string path;
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) {
                error = "--config expects a file path";
                return false;
            }
            path = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        } else {
            rest.push_back(args[i]);
        }
    }
    if (path.empty()) return true;

    std::ifstream f(path);
    if (!f) {
        error = "cannot read config file " + path;
        return false;
    }

    std::vector<std::string> given;
    for (const std::string& a : rest)
        if (a.rfind("--", 0) == 0) given.push_back(a.substr(0, a.find('=')));

    std::string line;
    while (std::getline(f, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            error = "malformed config line: " + line;
            return false;
        }
        const std::string flag = "--" + trim(line.substr(0, eq));
        if (std::find(given.begin(), given.end(), flag) != given.end()) continue;
        rest.push_back(flag);
        rest.push_back(trim(line.substr(eq + 1)));
    }
    args = std::move(rest);
    return true;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

struct SimulateArgs {
    std::size_t n_e = 10000;
    double check_fraction = 0.25;
    double p0 = 0.5;
    double e_threshold = 0.25;
    double eta_f = 1.0;
    double eta_b = 1.0;
    double p_flip_fwd = 0.0;
    double p_flip_bwd = 0.0;
    double p_a = 0.0;
    std::string attack = "none";
    double theta = M_PI / 4.0;
    std::size_t message_len = 0;
    std::uint64_t seed = 1;
    std::string out_path;
};

std::string simulate_record(const RunStats& s) {
    std::ostringstream os;
    os << "N_e = " << s.n_e << "\n";
    os << "N_r = " << s.n_received << "\n";
    os << "N = " << s.n_decoded << "\n";
    os << "e_hat_fwd = " << fmt6(s.e_hat_fwd) << "\n";
    os << "e_hat_bwd = " << fmt6(s.e_hat_bwd) << "\n";
    os << "ber = " << fmt6(s.ber) << "\n";
    os << "aborted = " << bool_str(s.aborted) << "\n";
    return os.str();
}

int cmd_simulate(const SimulateArgs& a, std::ostream& out, std::ostream& err) {
    ProtocolConfig cfg;
    cfg.n_e = a.n_e;
    cfg.check_fraction = a.check_fraction;
    cfg.p0 = a.p0;
    cfg.e_threshold = a.e_threshold;
    cfg.forward = {a.eta_f, a.p_flip_fwd};
    cfg.backward = {a.eta_b, a.p_flip_bwd};
    cfg.p_alice = a.p_a;
    cfg.seed = a.seed;
    if (a.attack == "identity") {
        cfg.attack = standard_attack(StandardAttack::Identity);
    } else if (a.attack == "cnot") {
        cfg.attack = standard_attack(StandardAttack::Cnot);
    } else if (a.attack == "phase-covariant") {
        cfg.attack = standard_attack(StandardAttack::PhaseCovariant, a.theta);
    } else if (a.attack != "none") {
        err << "error: unknown attack '" << a.attack << "'\n";
        return 1;
    }

    std::vector<int> message(a.message_len);
    Rng msg_rng = derive_rng(a.seed, 0x6d7367ULL);
    for (auto& b : message) b = uniform_double(msg_rng) < a.p0 ? 0 : 1;

    const RunResult res = run_protocol(cfg, message);
    const std::string record = simulate_record(res.stats);
    out << record;
    if (!a.out_path.empty()) {
        std::ofstream f(a.out_path, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << a.out_path << "\n";
            return 1;
        }
        f << record;
    }
    return res.stats.aborted ? 2 : 0;
}

int cmd_rate(double p0, double xi, double e, double eta_b, std::ostream& out) {
    const RateSplit s = secure_qubit_rate({p0, xi, e, eta_b});
    out << "r_s = " << fmt6(s.r_s) << "\n";
    out << "I_AB = " << fmt6(s.i_ab) << "\n";
    out << "I_AE = " << fmt6(s.i_ae) << "\n";
    out << "r_s_lossless = " << fmt6(secure_rate_closed_form(p0, xi)) << "\n";
    out << "threshold_ok = " << bool_str(threshold_check(e)) << "\n";
    return 0;
}

int cmd_scan(double p_a, double p_c, std::size_t steps, const std::string& out_path,
             std::ostream& out, std::ostream& err) {
    const ScanResult scan = boundary_scan(steps, p_a, p_c);

    std::ofstream grid_file(out_path, std::ios::binary);
    if (!grid_file) {
        err << "error: cannot write " << out_path << "\n";
        return 1;
    }
    grid_file << "eta_E,eta_B,r\n";
    for (const ScanPoint& p : scan.grid)
        grid_file << fmt6(p.eta_e) << ',' << fmt6(p.eta_b) << ',' << fmt6(p.r) << "\n";

    const std::string boundary_path = out_path + ".boundary.csv";
    std::ofstream boundary_file(boundary_path, std::ios::binary);
    if (!boundary_file) {
        err << "error: cannot write " << boundary_path << "\n";
        return 1;
    }
    boundary_file << "eta_B,eta_E_star\n";
    for (const BoundaryPoint& p : scan.boundary)
        boundary_file << fmt6(p.eta_b) << ',' << fmt6(p.eta_e_star) << "\n";

    const ScanPoint* best = &scan.grid.front();
    for (const ScanPoint& p : scan.grid)
        if (p.r > best->r) best = &p;
    out << "max_r = " << fmt6(best->r) << "\n";
    out << "argmax_eta_E = " << fmt6(best->eta_e) << "\n";
    out << "argmax_eta_B = " << fmt6(best->eta_b) << "\n";
    out << "wrote " << out_path << "\n";
    out << "wrote " << boundary_path << "\n";
    return 0;
}

int cmd_attack_bench(double p0, std::size_t theta_steps, std::size_t n_random,
                     std::size_t ancilla_dim, std::uint64_t seed, std::ostream& out) {
    out << "attack,e,xi,rate_numeric,rate_closed,gap\n";
    auto bench = [&](const std::string& name, const AttackUnitary& atk) {
        const DisturbanceReport d = disturbance(extract_coefficients(atk));
        const double numeric = secure_rate_numeric(encoded_cq_state(p0, forward_joint_state(atk)));
        const double closed = secure_rate_closed_form(p0, d.xi);
        out << name << ',' << fmt6(d.e) << ',' << fmt6(d.xi) << ',' << fmt6(numeric) << ','
            << fmt6(closed) << ',' << fmt6(numeric - closed) << "\n";
    };

    bench("identity", standard_attack(StandardAttack::Identity));
    bench("cnot", standard_attack(StandardAttack::Cnot));
    for (std::size_t j = 0; j <= theta_steps; ++j) {
        const double theta = (M_PI / 2.0) * static_cast<double>(j) / static_cast<double>(theta_steps);
        bench("phase-covariant(theta=" + fmt6(theta) + ")",
              standard_attack(StandardAttack::PhaseCovariant, theta));
    }
    Rng rng = derive_rng(seed, 0x62656e6368ULL);
    for (std::size_t j = 0; j < n_random; ++j)
        bench("random[" + std::to_string(j) + "]", random_attack(ancilla_dim, rng));
    return 0;
}

struct CodeCheckArgs {
    std::string experiment = "shannon";
    unsigned n = 15;
    double code_rate = 0.5;
    double p1 = 0.05;
    double eta = 0.0;
    double p_a = 0.01;
    double p_c = 0.03;
    double eta_e = 0.5;
    double eta_b = 0.0;
    std::size_t trials = 5000;
    std::uint64_t seed = 1;
};

int cmd_code_check(const CodeCheckArgs& a, std::ostream& out, std::ostream& err) {
    if (a.experiment == "shannon") {
        const double s = shannon_experiment(a.n, a.code_rate, a.p1, a.eta, a.trials, a.seed);
        out << "success_rate = " << fmt6(s) << "\n";
        return 0;
    }
    if (a.experiment == "eve") {
        FecInputs f;
        f.eta_e = a.eta_e;
        f.eta_b = a.eta_b;
        f.p_a = a.p_a;
        f.p_c = a.p_c;
        const EveAmbiguity res = eve_ambiguity_experiment(a.n, f, a.trials, a.seed);
        out << "bob_success = " << fmt6(res.bob_success) << "\n";
        out << "eve_list_exponent = " << fmt6(res.eve_list_exponent) << "\n";
        out << "k = " << res.k << "\n";
        out << "cond_reliable = " << bool_str(res.cond_reliable) << "\n";
        out << "cond_secure = " << bool_str(res.cond_secure) << "\n";
        return 0;
    }
    err << "error: unknown experiment '" << a.experiment << "'\n";
    return 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<std::string> argv_strings = args;
    {
        std::string config_error;
        if (!expand_config(argv_strings, config_error)) {
            err << "error: " << config_error << "\n";
            return 1;
        }
    }

    CLI::App app{"two-way QSDC simulator and security-analysis toolkit"};
    app.require_subcommand(1);

    // simulate
    SimulateArgs sim;
    CLI::App* c_sim = app.add_subcommand("simulate", "run one protocol block and print a summary record");
    c_sim->add_option("--n-e", sim.n_e, "photons in the block")->capture_default_str();
    c_sim->add_option("--check-fraction", sim.check_fraction, "control/check fraction C in (0, 1/2]")
        ->capture_default_str();
    c_sim->add_option("--p0", sim.p0, "probability of message bit 0")->capture_default_str();
    c_sim->add_option("--e-threshold", sim.e_threshold, "abort threshold for the control-mode error")
        ->capture_default_str();
    c_sim->add_option("--eta-f", sim.eta_f, "forward transmission probability")->capture_default_str();
    c_sim->add_option("--eta-b", sim.eta_b, "backward transmission probability")->capture_default_str();
    c_sim->add_option("--p-flip-fwd", sim.p_flip_fwd, "forward-channel flip probability")
        ->capture_default_str();
    c_sim->add_option("--p-flip-bwd", sim.p_flip_bwd, "backward-channel flip probability")
        ->capture_default_str();
    c_sim->add_option("--p-a", sim.p_a, "Alice encoding-error probability")->capture_default_str();
    c_sim->add_option("--attack", sim.attack, "none | identity | cnot | phase-covariant")
        ->capture_default_str();
    c_sim->add_option("--theta", sim.theta, "ancilla-overlap angle for phase-covariant")
        ->capture_default_str();
    c_sim->add_option("--message-len", sim.message_len, "explicit message bits (0 = padding only)")
        ->capture_default_str();
    c_sim->add_option("--seed", sim.seed, "master seed")->envname("QSDC_SEED")->capture_default_str();
    c_sim->add_option("--out", sim.out_path, "also write the record to this file");

    // rate
    double r_p0 = 0.5, r_xi = 0.0, r_e = 0.0, r_eta_b = 0.0;
    CLI::App* c_rate = app.add_subcommand("rate", "closed-form secure qubit rate");
    c_rate->add_option("--p0", r_p0, "probability of message bit 0")->capture_default_str();
    c_rate->add_option("--xi", r_xi, "conjugate-basis disturbance")->capture_default_str();
    c_rate->add_option("--e", r_e, "control-mode error rate")->capture_default_str();
    c_rate->add_option("--eta-b", r_eta_b, "backward-channel loss")->capture_default_str();

    // scan
    double s_pa = 0.01, s_pc = 0.03;
    std::size_t s_steps = 100;
    std::string s_out;
    CLI::App* c_scan = app.add_subcommand("scan", "secure-efficiency grid and boundary curve as CSV");
    c_scan->add_option("--pa", s_pa, "Alice encoding-error probability")->capture_default_str();
    c_scan->add_option("--pc", s_pc, "channel error probability")->capture_default_str();
    c_scan->add_option("--steps", s_steps, "grid steps per axis")->capture_default_str();
    c_scan->add_option("--out", s_out, "output CSV path")->required();

    // attack-bench
    double b_p0 = 0.5;
    std::size_t b_theta_steps = 4, b_random = 0, b_de = 2;
    std::uint64_t b_seed = 1;
    CLI::App* c_bench =
        app.add_subcommand("attack-bench", "numeric vs closed-form rates for fixture attacks");
    c_bench->add_option("--p0", b_p0, "probability of message bit 0")->capture_default_str();
    c_bench->add_option("--theta-steps", b_theta_steps, "phase-covariant grid steps over [0, pi/2]")
        ->capture_default_str();
    c_bench->add_option("--random", b_random, "additionally bench this many random attacks")
        ->capture_default_str();
    c_bench->add_option("--d-e", b_de, "ancilla dimension for random attacks")->capture_default_str();
    c_bench->add_option("--seed", b_seed, "seed for random attacks")
        ->envname("QSDC_SEED")
        ->capture_default_str();

    // code-check
    CodeCheckArgs cc;
    CLI::App* c_code = app.add_subcommand("code-check", "coding-oracle experiments");
    c_code->add_option("--experiment", cc.experiment, "shannon | eve")->capture_default_str();
    c_code->add_option("--n", cc.n, "block length (<= 20)")->capture_default_str();
    c_code->add_option("--code-rate", cc.code_rate, "code rate R (shannon)")->capture_default_str();
    c_code->add_option("--p1", cc.p1, "flip probability (shannon)")->capture_default_str();
    c_code->add_option("--eta", cc.eta, "erasure probability (shannon)")->capture_default_str();
    c_code->add_option("--pa", cc.p_a, "Alice encoding-error probability (eve)")->capture_default_str();
    c_code->add_option("--pc", cc.p_c, "channel error probability (eve)")->capture_default_str();
    c_code->add_option("--eta-e", cc.eta_e, "Eve's loss rate (eve)")->capture_default_str();
    c_code->add_option("--eta-b", cc.eta_b, "Bob's loss rate (eve)")->capture_default_str();
    c_code->add_option("--trials", cc.trials, "Monte Carlo trials")->capture_default_str();
    c_code->add_option("--seed", cc.seed, "master seed")->envname("QSDC_SEED")->capture_default_str();

    // --config is consumed by expand_config before parsing; registered here so
    // it shows up in --help
    std::string config_path_doc;
    for (CLI::App* sub : {c_sim, c_rate, c_scan, c_bench, c_code})
        sub->add_option("--config", config_path_doc,
                        "flat key=value config file; explicit flags override it");

    std::vector<const char*> argv;
    argv.reserve(argv_strings.size() + 1);
    argv.push_back("qsdc");
    for (const auto& a : argv_strings) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (c_sim->parsed()) return cmd_simulate(sim, out, err);
        if (c_rate->parsed()) return cmd_rate(r_p0, r_xi, r_e, r_eta_b, out);
        if (c_scan->parsed()) return cmd_scan(s_pa, s_pc, s_steps, s_out, out, err);
        if (c_bench->parsed())
            return cmd_attack_bench(b_p0, b_theta_steps, b_random, b_de, b_seed, out);
        if (c_code->parsed()) return cmd_code_check(cc, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand given\n";
    return 1;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, std::cout, std::cerr);
}

} // namespace qsdc
