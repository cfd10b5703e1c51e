#pragma once

// Multimode displaced vacua c * phase * D(gamma)|0>, kept in closed form.
// Nothing here ever expands a state in a number basis.

#include <Eigen/Dense>

#include <complex>
#include <span>

namespace ionprobe {

using cplx = std::complex<double>;

struct DisplacedVacuum {
    Eigen::VectorXcd amplitudes;  ///< gamma, one entry per mode
    cplx phase{1.0, 0.0};         ///< unit modulus, from displacement composition
    cplx weight{1.0, 0.0};        ///< free coefficient for superposition bookkeeping

    static DisplacedVacuum vacuum(Eigen::Index n_modes) {
        return {Eigen::VectorXcd::Zero(n_modes), {1.0, 0.0}, {1.0, 0.0}};
    }
    Eigen::Index size() const { return amplitudes.size(); }
};

/// D(d) applied to the state: gamma <- gamma + d and
/// phase <- phase * exp(sum_j (d_j gamma_j^* - d_j^* gamma_j) / 2).
DisplacedVacuum displace(const DisplacedVacuum& state, const Eigen::VectorXcd& d);

/// Free evolution under sum_j w_j b_j^dag b_j: gamma_j <- gamma_j exp(-i w_j t).
DisplacedVacuum evolve(const DisplacedVacuum& state, std::span<const double> frequencies, double t);

/// <a|b>, including phases and weights.
cplx overlap(const DisplacedVacuum& a, const DisplacedVacuum& b);

} // namespace ionprobe
