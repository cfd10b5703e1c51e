#pragma once

// In-plane (x, y) potential of N ions on a ring-periodic line: transverse trap
// 0.5 nu_t^2 y^2 per ion plus pairwise Coulomb 1/r. Axial separations are taken
// along the periodic coordinate; pairs beyond the cutoff are dropped.

#include <Eigen/Dense>

namespace ionprobe {

struct RingGeometry {
    int n_ions = 0;
    int cutoff = 0;
    double nu_t = 0.0;
};

/// Coordinates are packed as (x_0, y_0, x_1, y_1, ...), x measured from the
/// lattice site i * a.
double ring_energy(const RingGeometry& ring, const Eigen::VectorXd& displacement);
Eigen::VectorXd ring_gradient(const RingGeometry& ring, const Eigen::VectorXd& displacement);
/// Analytic Hessian (mass-weighted, m = 1).
Eigen::MatrixXd ring_hessian(const RingGeometry& ring, const Eigen::VectorXd& displacement);

/// Displacements of the planar zigzag (x_i = 0, y_i = (-1)^(i+1) b / 2).
Eigen::VectorXd zigzag_displacement(int n_ions, double b);

} // namespace ionprobe
