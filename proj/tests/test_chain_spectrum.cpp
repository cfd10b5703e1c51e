#include "ionprobe/chain_spectrum.hpp"
#include "ionprobe/errors.hpp"
#include "ionprobe/ring_potential.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace ionprobe;

namespace {

// Direct partial sum with Euler-Maclaurin tail.
double zeta3_direct() {
    const long n_max = 10'000'000;
    double s = 0.0;
    for (long n = n_max; n >= 1; --n) s += 1.0 / (double(n) * double(n) * double(n));
    const double N = double(n_max);
    return s + 1.0 / (2.0 * N * N) - 1.0 / (2.0 * N * N * N) + 1.0 / (4.0 * N * N * N * N);
}

// Transverse eigenfrequencies of the linear ring from the numerical Hessian.
std::vector<double> hessian_y_frequencies(const ChainParams& p) {
    const RingGeometry ring{p.n_ions, p.cutoff(), transverse_trap_frequency(p)};
    const Eigen::MatrixXd h = ring_hessian(ring, Eigen::VectorXd::Zero(2 * p.n_ions));
    Eigen::MatrixXd hy(p.n_ions, p.n_ions);
    for (int i = 0; i < p.n_ions; ++i)
        for (int j = 0; j < p.n_ions; ++j) hy(i, j) = h(2 * i + 1, 2 * j + 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hy);
    std::vector<double> w;
    for (double l : es.eigenvalues()) w.push_back(std::sqrt(l));
    return w;
}

} // namespace

TEST_CASE("zeta(3) and the critical frequency") {
    const double z = zeta3_direct();
    CHECK(zeta3() == doctest::Approx(z).epsilon(1e-13));
    CHECK(critical_frequency() == doctest::Approx(std::sqrt(3.5 * z)).epsilon(1e-13));
    CHECK(critical_frequency() == doctest::Approx(2.051146).epsilon(1e-6));
}

TEST_CASE("k = pi dispersion zero converges to nu_c") {
    double s = 0.0;
    for (int n = 1; n <= 1000; n += 2) s += 4.0 / (double(n) * n * n);
    const double nu_c = ring_critical_frequency(4000, 1000);
    CHECK(nu_c == doctest::Approx(std::sqrt(s)).epsilon(1e-12));
    CHECK(std::abs(nu_c / critical_frequency() - 1.0) < 1e-3);
    CHECK(transverse_dispersion_sq(std::numbers::pi, nu_c, 1000) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
}

TEST_CASE("pair multiplicity") {
    CHECK(pair_multiplicity(3, 10) == 2.0);
    CHECK(pair_multiplicity(5, 10) == 1.0);
    CHECK(pair_multiplicity(5, 0) == 2.0);
}

TEST_CASE("linear spectrum matches the ring Hessian") {
    for (int n : {8, 12, 30}) {
        ChainParams p;
        p.n_ions = n;
        p.delta = 0.05;
        const ModeSet m = linear_spectrum(p);
        REQUIRE(m.size() == std::size_t(n));
        const auto ref = hessian_y_frequencies(p);
        for (int j = 0; j < n; ++j) CHECK(m.frequencies[j] == doctest::Approx(ref[j]).epsilon(1e-8));
        CHECK(std::is_sorted(m.frequencies.begin(), m.frequencies.end()));
        double s2 = 0.0;
        for (double s : m.probe_amplitudes) s2 += s * s;
        CHECK(s2 == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(m.labels[m.soft_index].branch == "y-staggered");
    }
}

TEST_CASE("soft mode closes at the transition") {
    ChainParams p;
    p.n_ions = 40;
    double prev = 1e9;
    for (double d : {1e-1, 1e-2, 1e-3, 1e-4}) {
        p.delta = d;
        ModeSet m = chain_spectrum(p);
        const double gap = soft_mode_gap(m);
        const double nu_c = ring_critical_frequency(p.n_ions, p.cutoff());
        const double nu_t = nu_c * (1.0 + d);
        CHECK(gap == doctest::Approx(std::sqrt(nu_t * nu_t - nu_c * nu_c)).epsilon(1e-8));
        CHECK(gap < prev);
        prev = gap;
    }
}

TEST_CASE("zigzag amplitude: zero on the linear side, square-root onset") {
    ChainParams p;
    p.n_ions = 20;
    p.delta = 1e-3;
    CHECK(zigzag_equilibrium(p).b == 0.0);
    p.delta = -1e-4;
    const double b4 = zigzag_equilibrium(p).b;
    p.delta = -1e-6;
    const double b6 = zigzag_equilibrium(p).b;
    CHECK(b4 > 0.0);
    CHECK(b6 > 0.0);
    CHECK(std::log(b4 / b6) / std::log(100.0) == doctest::Approx(0.5).epsilon(1e-2));
}

TEST_CASE("zigzag equilibrium is a stationary point of the ring energy") {
    ChainParams p;
    p.n_ions = 16;
    p.delta = -0.05;
    const ZigzagEquilibrium eq = zigzag_equilibrium(p);
    const RingGeometry ring{p.n_ions, p.cutoff(), transverse_trap_frequency(p)};
    const Eigen::VectorXd u = zigzag_displacement(p.n_ions, eq.b);
    CHECK(ring_gradient(ring, u).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(ring_energy(ring, u) / p.n_ions == doctest::Approx(eq.energy).epsilon(1e-10));
    // the ansatz energy is minimal at eq.b
    CHECK(zigzag_energy(p, eq.b) < zigzag_energy(p, eq.b * 1.01));
    CHECK(zigzag_energy(p, eq.b) < zigzag_energy(p, eq.b * 0.99));
}

TEST_CASE("analytic Hessian agrees with finite differences of the gradient") {
    for (double d : {0.1, -0.05}) {
        ChainParams p;
        p.n_ions = 10;
        p.delta = d;
        const RingGeometry ring{p.n_ions, p.cutoff(), transverse_trap_frequency(p)};
        Eigen::VectorXd u = zigzag_displacement(p.n_ions, zigzag_equilibrium(p).b);
        for (int i = 0; i < u.size(); ++i) u[i] += 0.01 * std::sin(1.7 * i);
        const Eigen::MatrixXd h = ring_hessian(ring, u);
        const double step = 1e-6;
        Eigen::MatrixXd fd(u.size(), u.size());
        for (int j = 0; j < u.size(); ++j) {
            Eigen::VectorXd up = u, dn = u;
            up[j] += step;
            dn[j] -= step;
            fd.col(j) = (ring_gradient(ring, up) - ring_gradient(ring, dn)) / (2.0 * step);
        }
        CHECK((h - fd).cwiseAbs().maxCoeff() < 1e-6);
        CHECK((h - h.transpose()).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("gradient agrees with finite differences of the energy") {
    ChainParams p;
    p.n_ions = 8;
    p.delta = -0.1;
    const RingGeometry ring{p.n_ions, p.cutoff(), transverse_trap_frequency(p)};
    Eigen::VectorXd u = zigzag_displacement(p.n_ions, 0.3);
    for (int i = 0; i < u.size(); ++i) u[i] += 0.02 * std::cos(0.9 * i);
    const Eigen::VectorXd g = ring_gradient(ring, u);
    for (int j = 0; j < u.size(); ++j) {
        Eigen::VectorXd up = u, dn = u;
        up[j] += 1e-5;
        dn[j] -= 1e-5;
        CHECK(g[j] == doctest::Approx((ring_energy(ring, up) - ring_energy(ring, dn)) / 2e-5).epsilon(1e-6));
    }
}

TEST_CASE("zigzag spectrum") {
    ChainParams p;
    p.n_ions = 12;
    p.delta = -0.1;
    const ZigzagEquilibrium eq = zigzag_equilibrium(p);
    ModeSet m = zigzag_spectrum(p, eq);
    CHECK(std::is_sorted(m.frequencies.begin(), m.frequencies.end()));
    CHECK(m.size() + m.discarded == std::size_t(2 * p.n_ions));
    for (double w : m.frequencies) CHECK(w > 0.0);
    double s2 = 0.0;
    for (double s : m.probe_amplitudes) s2 += s * s;
    CHECK(s2 == doctest::Approx(1.0).epsilon(1e-9));

    // forced linear geometry reproduces the y-branch of the linear chain
    ChainParams q = p;
    q.delta = 0.1;
    ModeSet forced = zigzag_spectrum(q, {0.0, 0.0, true});
    const ModeSet lin = linear_spectrum(q);
    // degenerate partners may mix, so compare coupled frequencies and the
    // total kick weight sum S^2 / w
    double wf = 0.0, wl = 0.0;
    for (std::size_t j = 0; j < forced.size(); ++j) wf += std::pow(forced.probe_amplitudes[j], 2) / forced.frequencies[j];
    for (std::size_t j = 0; j < lin.size(); ++j) {
        wl += std::pow(lin.probe_amplitudes[j], 2) / lin.frequencies[j];
        if (std::abs(lin.probe_amplitudes[j]) < 1e-12) continue;
        double nearest = 1e9;
        for (double w : forced.frequencies) nearest = std::min(nearest, std::abs(w - lin.frequencies[j]));
        CHECK(nearest < 1e-8);
    }
    CHECK(wf == doctest::Approx(wl).epsilon(1e-10));
}

TEST_CASE("chain parameter validation") {
    ChainParams p;
    p.n_ions = 7;
    CHECK_THROWS_AS(p.validate(), ConfigError);
    p.n_ions = 10;
    p.delta = 1e-8;
    CHECK_THROWS_AS(p.validate(), ConfigError);
    p.delta = 0.1;
    p.neighbor_cutoff = 6;
    CHECK_THROWS_AS(p.validate(), ConfigError);
    p.neighbor_cutoff = 5;
    CHECK_NOTHROW(p.validate());
}
