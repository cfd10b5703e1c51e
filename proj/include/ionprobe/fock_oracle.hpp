#pragma once

// Brute-force reference for the Ramsey sequence: qubit x truncated Fock space
// of a few modes, displacement built as a matrix exponential of the ladder
// operators, exact diagonal free evolution and an explicit partial trace.
// Independent of the closed-form coherent-state route; used only for
// validation.

#include "ionprobe/qubit_state.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace ionprobe {

struct FockConfig {
    std::vector<double> frequencies;
    std::vector<std::complex<double>> alphas;
    int cutoff = 20;  ///< highest retained occupation per mode

    std::size_t env_dim() const;
    /// Throws ConfigError for > 4 modes, mismatched lengths or a total
    /// dimension 2 (cutoff+1)^n above 1e6.
    void validate() const;
};

struct FockResult {
    QubitState state;
    double leakage = 0.0;  ///< max population in the top two Fock levels of any mode
    double norm = 1.0;     ///< norm of the joint state before the partial trace
};

class FockOracle {
public:
    explicit FockOracle(FockConfig config);

    /// Throws NumericalError when leakage reaches 1e-8 (cutoff too small).
    FockResult simulate(const QubitState& initial, double t) const;

    /// <0|D|0> in the truncated space.
    std::complex<double> vacuum_displacement_overlap() const;

    const FockConfig& config() const { return config_; }

private:
    using Vec = Eigen::VectorXcd;
    Vec apply_modes(const Vec& v, bool adjoint) const;
    double leakage(const Vec& e, const Vec& g) const;

    FockConfig config_;
    std::vector<Eigen::MatrixXcd> displacement_;  // one (cutoff+1)^2 block per mode
    Eigen::VectorXd energy_;                      // sum_k w_k n_k per basis index
};

inline constexpr double kMaxLeakage = 1e-8;

} // namespace ionprobe
