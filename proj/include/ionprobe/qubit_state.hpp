#pragma once

#include <Eigen/Dense>

#include <complex>

namespace ionprobe {

/// Probe density matrix in the {|e>, |g>} basis.
struct QubitState {
    double ee = 1.0;
    double gg = 0.0;
    std::complex<double> eg{0.0, 0.0};  ///< <e|rho|g>

    static QubitState pure(std::complex<double> c_e, std::complex<double> c_g);
    /// cos(theta/2)|e> + e^{i phi} sin(theta/2)|g>
    static QubitState from_bloch(double theta, double phi);
    static QubitState from_matrix(const Eigen::Matrix2cd& m);

    Eigen::Matrix2cd matrix() const;
    double trace() const { return ee + gg; }
    /// Throws NumericalError unless trace 1, Hermitian and positive within tol.
    void validate(double tol = 1e-10) const;
};

/// Antipodal pure pair: the Bloch state (theta, phi) and its orthogonal partner.
struct BlochPair {
    double theta = 0.0;
    double phi = 0.0;

    QubitState first() const { return QubitState::from_bloch(theta, phi); }
    QubitState second() const;
};

/// |+>, |-> eigenstates of sigma_x.
inline constexpr BlochPair kSigmaXPair{1.5707963267948966, 0.0};

} // namespace ionprobe
