#pragma once

// The numerical studies: single-chain dynamics, delta and size sweeps of the
// non-Markovianity measure, and revival detection in D(t).

#include "ionprobe/nonmarkov.hpp"
#include "ionprobe/ramsey_probe.hpp"
#include "ionprobe/run_config.hpp"

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace ionprobe {

/// Spectrum, kick, visibility signal and sigma_x-pair trace distance of one chain.
struct ChainRun {
    ModeSet modes;
    KickVector kick;
    ProbeSignal signal;
    std::vector<double> d_opt;
    double soft_gap = 0.0;
};

ChainRun run_chain(const ChainParams& params, const TimeGrid& grid);

struct DynamicsTable {
    std::vector<double> tau, d_opt, visibility, phase_b;
    std::vector<std::complex<double>> rho_eg;  ///< coherence of the evolved |+>
};

DynamicsTable run_dynamics(const RunConfig& config, int threads = 1);
void write_dynamics_csv(std::ostream& out, const DynamicsTable& table);

void write_spectrum_csv(std::ostream& out, const ModeSet& modes);

/// Measure for the configured chain and pair (closed form for the sigma_x pair).
BLPResult run_blp(const RunConfig& config, int threads = 1);

struct SweepRow {
    double key = 0.0;       ///< delta, or n_ions for size sweeps
    std::string side;       ///< "linear" or "zigzag"
    double measure = 0.0;
    double xi = 0.0;
    double soft_gap = 0.0;
    int n_revivals = 0;
    double runtime = 0.0;   ///< seconds; not written to CSV (keeps output reproducible)
    std::string status = "ok";
};

/// One row per entry of config.sweep_deltas(), sorted by delta. Failing rows
/// carry status "error: ..." and NaN values; the sweep continues.
std::vector<SweepRow> sweep_delta(const RunConfig& config, int threads = 1);
/// One row per config.n_values entry at delta = config.size_delta, sorted by N.
std::vector<SweepRow> sweep_size(const RunConfig& config, int threads = 1);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

void write_pair_scan_csv(std::ostream& out, const PairScan& scan);

struct Revival {
    double tau = 0.0;
    double height = 0.0;
    double prominence = 0.0;
};

/// Local maxima whose topographic prominence reaches the threshold, in
/// ascending tau.
std::vector<Revival> detect_revivals(std::span<const double> series, const TimeGrid& grid, double prominence);

} // namespace ionprobe
