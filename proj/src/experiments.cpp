#include "ionprobe/experiments.hpp"

#include "ionprobe/csv.hpp"
#include "ionprobe/errors.hpp"
#include "ionprobe/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ionprobe {
namespace {

const char* side_of(double delta) { return delta > 0.0 ? "linear" : "zigzag"; }

SweepRow measure_row(const ChainParams& params, const TimeGrid& grid, double key) {
    const auto start = std::chrono::steady_clock::now();
    SweepRow row;
    row.key = key;
    row.side = side_of(params.delta);
    try {
        const ChainRun run = run_chain(params, grid);
        const BLPResult blp = blp_measure(run.d_opt);
        row.measure = blp.measure;
        row.n_revivals = blp.n_revivals;
        row.xi = run.signal.xi;
        row.soft_gap = run.soft_gap;
    } catch (const std::exception& e) {
        constexpr double nan = std::numeric_limits<double>::quiet_NaN();
        row.measure = row.xi = row.soft_gap = nan;
        row.status = std::string("error: ") + e.what();
    }
    row.runtime = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return row;
}

// For every index, the minimum of the series between it and the nearest
// strictly higher sample on one side (or the series end).
std::vector<double> base_levels(std::span<const double> y, bool reverse) {
    const std::size_t n = y.size();
    std::vector<double> base(n);
    struct Entry {
        double value;
        double seg_min;
    };
    std::vector<Entry> stack;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t i = reverse ? n - 1 - k : k;
        double cur_min = y[i];
        while (!stack.empty() && stack.back().value <= y[i]) {
            cur_min = std::min(cur_min, stack.back().seg_min);
            stack.pop_back();
        }
        base[i] = cur_min;
        stack.push_back({y[i], cur_min});
    }
    return base;
}

} // namespace

ChainRun run_chain(const ChainParams& params, const TimeGrid& grid) {
    ChainRun run;
    run.modes = chain_spectrum(params);
    run.soft_gap = soft_mode_gap(run.modes);
    run.kick = kick_amplitudes(run.modes, params.eta, params.omega_floor);
    run.signal = probe_signal(run.kick, run.modes, grid);
    run.d_opt.resize(grid.samples());
    for (std::size_t i = 0; i < run.d_opt.size(); ++i) run.d_opt[i] = trace_distance_closed_form(run.signal, i);
    return run;
}

DynamicsTable run_dynamics(const RunConfig& config, int threads) {
    config.validate();
    const TimeGrid grid = config.grid();
    const ChainRun run = run_chain(config.chain(), grid);
    DynamicsTable table;
    table.d_opt = run.d_opt;
    table.visibility = run.signal.V;
    table.phase_b = run.signal.B;
    table.tau.resize(grid.samples());
    table.rho_eg.resize(grid.samples());
    const QubitState plus = kSigmaXPair.first();
    parallel_for(grid.samples(), threads, [&](std::size_t i) {
        table.tau[i] = grid.at(i);
        table.rho_eg[i] = ramsey_map(plus, run.modes, run.kick, grid.at(i)).eg;
    });
    return table;
}

void write_dynamics_csv(std::ostream& out, const DynamicsTable& t) {
    CsvWriter csv(out, {"tau", "D_opt", "V", "B", "rho_eg_re", "rho_eg_im"});
    for (std::size_t i = 0; i < t.tau.size(); ++i) {
        csv.cell(t.tau[i]).cell(t.d_opt[i]).cell(t.visibility[i]).cell(t.phase_b[i]);
        csv.cell(t.rho_eg[i].real()).cell(t.rho_eg[i].imag());
        csv.end_row();
    }
}

void write_spectrum_csv(std::ostream& out, const ModeSet& modes) {
    CsvWriter csv(out, {"index", "k_index", "branch", "omega", "s1"});
    for (std::size_t j = 0; j < modes.size(); ++j) {
        csv.cell(j).cell(modes.labels[j].k_index).cell(modes.labels[j].branch);
        csv.cell(modes.frequencies[j]).cell(modes.probe_amplitudes[j]);
        csv.end_row();
    }
}

BLPResult run_blp(const RunConfig& config, int threads) {
    config.validate();
    const TimeGrid grid = config.grid();
    const BlochPair pair{config.pair_theta, config.pair_phi};
    if (config.uses_sigma_x_pair()) {
        const ChainRun run = run_chain(config.chain(), grid);
        return blp_measure(run.d_opt);
    }
    ModeSet modes = chain_spectrum(config.chain());
    const KickVector kick = kick_amplitudes(modes, config.eta, config.omega_floor);
    BLPResult result = blp_measure(pair_trace_distance(pair, modes, kick, grid, threads));
    result.pair = pair;
    return result;
}

std::vector<SweepRow> sweep_delta(const RunConfig& config, int threads) {
    config.validate();
    const TimeGrid grid = config.grid();
    const std::vector<double> deltas = config.sweep_deltas();
    std::vector<SweepRow> rows(deltas.size());
    parallel_for(deltas.size(), threads, [&](std::size_t i) {
        rows[i] = measure_row(config.chain(config.n_ions, deltas[i]), grid, deltas[i]);
    });
    return rows;
}

std::vector<SweepRow> sweep_size(const RunConfig& config, int threads) {
    config.validate();
    const TimeGrid grid = config.grid();
    std::vector<int> sizes = config.n_values;
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    std::vector<SweepRow> rows(sizes.size());
    parallel_for(sizes.size(), threads, [&](std::size_t i) {
        rows[i] = measure_row(config.chain(sizes[i], config.size_delta), grid, sizes[i]);
    });
    return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    CsvWriter csv(out, {"key", "side", "measure", "xi", "soft_gap", "n_revivals", "status"});
    for (const auto& r : rows) {
        csv.cell(r.key).cell(r.side).cell(r.measure).cell(r.xi).cell(r.soft_gap).cell(r.n_revivals);
        csv.cell(r.status);
        csv.end_row();
    }
}

void write_pair_scan_csv(std::ostream& out, const PairScan& scan) {
    CsvWriter csv(out, {"theta", "phi", "measure"});
    for (const auto& e : scan.map) {
        csv.cell(e.theta).cell(e.phi).cell(e.measure);
        csv.end_row();
    }
}

std::vector<Revival> detect_revivals(std::span<const double> y, const TimeGrid& grid, double prominence) {
    if (!(prominence > 0.0)) throw std::invalid_argument("detect_revivals: prominence must be positive");
    std::vector<Revival> out;
    if (y.size() < 3) return out;
    const auto left = base_levels(y, false);
    const auto right = base_levels(y, true);
    std::size_t i = 1;
    while (i + 1 < y.size()) {
        if (!(y[i] > y[i - 1])) {
            ++i;
            continue;
        }
        // plateaus count once, located at their middle
        std::size_t j = i;
        while (j + 1 < y.size() && y[j + 1] == y[i]) ++j;
        if (j + 1 < y.size() && y[j + 1] < y[i]) {
            const std::size_t peak = (i + j) / 2;
            const double p = y[peak] - std::max(left[i], right[j]);
            if (p >= prominence) out.push_back({grid.at(peak), y[peak], p});
        }
        i = j + 1;
    }
    return out;
}

} // namespace ionprobe
