#include "ionprobe/validation.hpp"

#include "ionprobe/fock_oracle.hpp"
#include "ionprobe/nonmarkov.hpp"
#include "ionprobe/parallel.hpp"
#include "ionprobe/ramsey_probe.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace ionprobe {
namespace {

double state_deviation(const QubitState& a, const QubitState& b) {
    return std::max({std::abs(a.ee - b.ee), std::abs(a.gg - b.gg), std::abs(a.eg - b.eg)});
}

} // namespace

double GateReport::max_deviation() const {
    return std::max({max_state_deviation, max_distance_deviation, max_closed_form_deviation});
}

bool GateReport::passed() const { return max_deviation() <= tolerance && max_population_gap <= 1e-8; }

GateReport run_oracle_gate(const GateConfig& config, int threads) {
    const auto start = std::chrono::steady_clock::now();
    const FockOracle oracle(FockConfig{config.frequencies, config.alphas, config.cutoff});
    const ModeSet modes = synthetic_modes(config.frequencies);
    Eigen::VectorXcd a(static_cast<Eigen::Index>(config.alphas.size()));
    for (std::size_t k = 0; k < config.alphas.size(); ++k) a[static_cast<Eigen::Index>(k)] = config.alphas[k];
    const KickVector kick = kick_from_alphas(a);
    const TimeGrid grid = TimeGrid::make(config.tau_max, config.dtau);
    const ProbeSignal signal = probe_signal(kick, modes, grid);

    const QubitState plus = kSigmaXPair.first();
    const QubitState minus = kSigmaXPair.second();
    struct Sample {
        double state = 0.0, distance = 0.0, closed = 0.0, population = 0.0, leakage = 0.0;
    };
    std::vector<Sample> samples(grid.samples());
    parallel_for(grid.samples(), threads, [&](std::size_t i) {
        const double t = grid.at(i);
        const FockResult op = oracle.simulate(plus, t);
        const FockResult om = oracle.simulate(minus, t);
        const auto [cp, cm] = ramsey_map(kSigmaXPair, modes, kick, t);
        const double d_oracle = trace_distance(op.state, om.state);
        Sample& s = samples[i];
        s.state = std::max(state_deviation(op.state, cp), state_deviation(om.state, cm));
        s.distance = std::abs(trace_distance(cp, cm) - d_oracle);
        s.closed = std::abs(trace_distance_closed_form(signal, i) - d_oracle);
        s.population = std::abs(op.state.ee - om.state.ee);
        s.leakage = std::max(op.leakage, om.leakage);
    });

    GateReport r;
    r.tolerance = config.tolerance;
    r.samples = samples.size();
    for (const auto& s : samples) {
        r.max_state_deviation = std::max(r.max_state_deviation, s.state);
        r.max_distance_deviation = std::max(r.max_distance_deviation, s.distance);
        r.max_closed_form_deviation = std::max(r.max_closed_form_deviation, s.closed);
        r.max_population_gap = std::max(r.max_population_gap, s.population);
        r.max_leakage = std::max(r.max_leakage, s.leakage);
    }
    r.xi_deviation = std::abs(oracle.vacuum_displacement_overlap() - std::complex<double>(signal.xi, 0.0));
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace ionprobe
