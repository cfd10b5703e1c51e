#include "ionprobe/csv.hpp"
#include "ionprobe/errors.hpp"
#include "ionprobe/experiments.hpp"
#include "ionprobe/validation.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <memory>

using namespace ionprobe;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct Options {
    std::string config_path;
    std::string out_path;
    int threads = 1;
    std::vector<std::string> overrides;
};

RunConfig resolve(const Options& opt) {
    RunConfig cfg = opt.config_path.empty() ? RunConfig{} : load_config(opt.config_path);
    for (const auto& o : opt.overrides) apply_override(cfg, o);
    if (!opt.out_path.empty()) cfg.output = opt.out_path;
    cfg.validate();
    return cfg;
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (path.empty() || path == "-") return;
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file_) throw ConfigError("cannot open output file: " + path);
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

int run(const std::string& command, const Options& opt) {
    if (command == "validate") {
        const GateReport r = run_oracle_gate({}, opt.threads);
        std::cout << "samples " << r.samples << '\n'
                  << "max_state_deviation " << format_number(r.max_state_deviation) << '\n'
                  << "max_distance_deviation " << format_number(r.max_distance_deviation) << '\n'
                  << "max_closed_form_deviation " << format_number(r.max_closed_form_deviation) << '\n'
                  << "max_population_gap " << format_number(r.max_population_gap) << '\n'
                  << "xi_deviation " << format_number(r.xi_deviation) << '\n'
                  << "max_leakage " << format_number(r.max_leakage) << '\n'
                  << "max_deviation " << format_number(r.max_deviation()) << '\n'
                  << (r.passed() ? "PASS" : "FAIL") << '\n';
        return r.passed() ? 0 : kExitNumerical;
    }

    const RunConfig cfg = resolve(opt);
    Output out(cfg.output);
    std::ostream& os = out.stream();
    if (command == "spectrum") {
        write_spectrum_csv(os, chain_spectrum(cfg.chain()));
    } else if (command == "dynamics") {
        write_dynamics_csv(os, run_dynamics(cfg, opt.threads));
    } else if (command == "blp") {
        const BLPResult r = run_blp(cfg, opt.threads);
        const auto revivals = detect_revivals(r.series, cfg.grid(), cfg.prominence);
        CsvWriter csv(os, {"theta", "phi", "measure", "n_revivals", "first_revival_tau"});
        csv.cell(r.pair.theta).cell(r.pair.phi).cell(r.measure).cell(r.n_revivals);
        csv.cell(revivals.empty() ? std::numeric_limits<double>::quiet_NaN() : revivals.front().tau);
        csv.end_row();
    } else if (command == "revivals") {
        const BLPResult r = run_blp(cfg, opt.threads);
        CsvWriter csv(os, {"tau", "height", "prominence"});
        for (const auto& p : detect_revivals(r.series, cfg.grid(), cfg.prominence)) {
            csv.cell(p.tau).cell(p.height).cell(p.prominence);
            csv.end_row();
        }
    } else if (command == "sweep-delta") {
        write_sweep_csv(os, sweep_delta(cfg, opt.threads));
    } else if (command == "sweep-size") {
        write_sweep_csv(os, sweep_size(cfg, opt.threads));
    } else if (command == "optimize-pair") {
        const ModeSet modes = chain_spectrum(cfg.chain());
        const KickVector kick = kick_amplitudes(modes, cfg.eta, cfg.omega_floor);
        write_pair_scan_csv(os, optimize_pair(modes, kick, cfg.grid(), cfg.n_theta, cfg.n_phi, opt.threads));
    } else if (command == "config") {
        os << dump_config(cfg);
    }
    os.flush();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ramsey-probe non-Markovianity near the linear-zigzag transition of an ion ring"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--config", opt.config_path, "key = value configuration file")->check(CLI::ExistingFile);
    app.add_option("--out", opt.out_path, "output path ('-' for stdout)");
    app.add_option("--threads", opt.threads, "worker threads")->check(CLI::Range(1, 256));
    app.add_option("--override", opt.overrides, "key=value, applied after --config (repeatable)");

    const std::vector<std::pair<const char*, const char*>> commands{
        {"spectrum", "normal modes of the configured chain"},
        {"dynamics", "D_opt(tau), V, B and the |+> coherence"},
        {"blp", "non-Markovianity measure for the configured pair"},
        {"revivals", "prominent revival peaks of D(tau)"},
        {"sweep-delta", "measure versus delta on both sides of the transition"},
        {"sweep-size", "measure versus number of ions"},
        {"optimize-pair", "measure over the antipodal-pair grid"},
        {"validate", "Fock-space oracle gate"},
        {"config", "print the resolved configuration"},
    };
    for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        return run(app.get_subcommands().front()->get_name(), opt);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}
