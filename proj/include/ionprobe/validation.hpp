#pragma once

// Oracle gate: the Fock-space reference against the coherent-state Ramsey
// map and the closed-form trace distance on a fixed three-mode system.

#include <complex>
#include <vector>

namespace ionprobe {

struct GateConfig {
    std::vector<double> frequencies{0.3, 1.0, 1.7};
    std::vector<std::complex<double>> alphas{{0.0, 0.4}, {0.0, 0.2}, {0.0, 0.1}};
    int cutoff = 20;
    double tau_max = 50.0;
    double dtau = 0.1;
    double tolerance = 1e-6;
};

struct GateReport {
    double max_state_deviation = 0.0;        ///< ramsey_map vs oracle, max matrix-element error
    double max_distance_deviation = 0.0;     ///< D from ramsey_map vs oracle
    double max_closed_form_deviation = 0.0;  ///< closed-form D vs oracle
    double max_population_gap = 0.0;         ///< |ee(+) - ee(-)| through the oracle
    double xi_deviation = 0.0;               ///< oracle <0|D|0> vs exp(-sum|a|^2/2)
    double max_leakage = 0.0;
    double seconds = 0.0;
    std::size_t samples = 0;
    double tolerance = 1e-6;

    double max_deviation() const;
    bool passed() const;
};

GateReport run_oracle_gate(const GateConfig& config = {}, int threads = 1);

} // namespace ionprobe
