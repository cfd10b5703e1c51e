#include "ionprobe/ring_potential.hpp"

#include <cmath>

namespace ionprobe {
namespace {

// Visits every unordered pair (i, j) with its periodic axial separation n and
// a weight. The antipodal pair is reached from both ends, once each way round
// the ring, so each visit carries weight 1/2.
template <class Fn>
void for_each_pair(const RingGeometry& ring, Fn&& fn) {
    const int N = ring.n_ions;
    for (int i = 0; i < N; ++i)
        for (int n = 1; n <= ring.cutoff; ++n) fn(i, (i + n) % N, n, 2 * n == N ? 0.5 : 1.0);
}

struct PairVector {
    double dx, dy, r;
};

PairVector separation(const Eigen::VectorXd& u, int i, int j, int n) {
    const double dx = n + u[2 * j] - u[2 * i];
    const double dy = u[2 * j + 1] - u[2 * i + 1];
    return {dx, dy, std::hypot(dx, dy)};
}

} // namespace

Eigen::VectorXd zigzag_displacement(int n_ions, double b) {
    Eigen::VectorXd u = Eigen::VectorXd::Zero(2 * n_ions);
    // ion i (1-based) sits at y = (-1)^i b/2; array index 0 is ion 1
    for (int idx = 0; idx < n_ions; ++idx) u[2 * idx + 1] = (idx % 2 == 0 ? -0.5 : 0.5) * b;
    return u;
}

double ring_energy(const RingGeometry& ring, const Eigen::VectorXd& u) {
    double trap = 0.0;
    for (int i = 0; i < ring.n_ions; ++i) trap += u[2 * i + 1] * u[2 * i + 1];
    double coulomb = 0.0;
    for_each_pair(ring, [&](int i, int j, int n, double w) { coulomb += w / separation(u, i, j, n).r; });
    return 0.5 * ring.nu_t * ring.nu_t * trap + coulomb;
}

Eigen::VectorXd ring_gradient(const RingGeometry& ring, const Eigen::VectorXd& u) {
    Eigen::VectorXd g = Eigen::VectorXd::Zero(u.size());
    const double nu2 = ring.nu_t * ring.nu_t;
    for (int i = 0; i < ring.n_ions; ++i) g[2 * i + 1] = nu2 * u[2 * i + 1];
    for_each_pair(ring, [&](int i, int j, int n, double w) {
        const auto p = separation(u, i, j, n);
        const double r3 = p.r * p.r * p.r / w;
        // d(1/r)/d(r_j) = -d / r^3
        g[2 * j] -= p.dx / r3;
        g[2 * j + 1] -= p.dy / r3;
        g[2 * i] += p.dx / r3;
        g[2 * i + 1] += p.dy / r3;
    });
    return g;
}

Eigen::MatrixXd ring_hessian(const RingGeometry& ring, const Eigen::VectorXd& u) {
    const Eigen::Index dim = u.size();
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(dim, dim);
    const double nu2 = ring.nu_t * ring.nu_t;
    for (int i = 0; i < ring.n_ions; ++i) H(2 * i + 1, 2 * i + 1) += nu2;
    for_each_pair(ring, [&](int i, int j, int n, double w) {
        const auto p = separation(u, i, j, n);
        const double r2 = p.r * p.r;
        const double r5 = r2 * r2 * p.r / w;
        Eigen::Matrix2d h;
        h(0, 0) = (3.0 * p.dx * p.dx - r2) / r5;
        h(1, 1) = (3.0 * p.dy * p.dy - r2) / r5;
        h(0, 1) = h(1, 0) = 3.0 * p.dx * p.dy / r5;
        H.block<2, 2>(2 * i, 2 * i) += h;
        H.block<2, 2>(2 * j, 2 * j) += h;
        H.block<2, 2>(2 * i, 2 * j) -= h;
        H.block<2, 2>(2 * j, 2 * i) -= h;
    });
    return H;
}

} // namespace ionprobe
