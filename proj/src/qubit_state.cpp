#include "ionprobe/qubit_state.hpp"

#include "ionprobe/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>

namespace ionprobe {

QubitState QubitState::pure(std::complex<double> c_e, std::complex<double> c_g) {
    QubitState s;
    s.ee = std::norm(c_e);
    s.gg = std::norm(c_g);
    s.eg = c_e * std::conj(c_g);
    return s;
}

QubitState QubitState::from_bloch(double theta, double phi) {
    return pure(std::cos(0.5 * theta), std::polar(std::sin(0.5 * theta), phi));
}

QubitState QubitState::from_matrix(const Eigen::Matrix2cd& m) {
    QubitState s;
    s.ee = m(0, 0).real();
    s.gg = m(1, 1).real();
    s.eg = m(0, 1);
    return s;
}

Eigen::Matrix2cd QubitState::matrix() const {
    Eigen::Matrix2cd m;
    m << ee, eg, std::conj(eg), gg;
    return m;
}

void QubitState::validate(double tol) const {
    if (std::abs(trace() - 1.0) > tol) throw NumericalError("qubit state trace deviates from 1");
    // eigenvalues of [[ee, eg], [eg*, gg]]
    const double mean = 0.5 * (ee + gg);
    const double radius = std::hypot(0.5 * (ee - gg), std::abs(eg));
    if (mean - radius < -tol) throw NumericalError("qubit state has a negative eigenvalue");
}

QubitState BlochPair::second() const {
    double phi2 = phi + std::numbers::pi;
    if (phi2 >= 2.0 * std::numbers::pi) phi2 -= 2.0 * std::numbers::pi;
    return QubitState::from_bloch(std::numbers::pi - theta, phi2);
}

} // namespace ionprobe
