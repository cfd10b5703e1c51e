#include "ionprobe/ramsey_probe.hpp"
#include "ionprobe/nonmarkov.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace ionprobe;

namespace {

Eigen::VectorXcd alphas(std::initializer_list<cplx> v) {
    Eigen::VectorXcd out(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (auto x : v) out[i++] = x;
    return out;
}

double state_gap(const QubitState& a, const QubitState& b) {
    return std::max({std::abs(a.ee - b.ee), std::abs(a.gg - b.gg), std::abs(a.eg - b.eg)});
}

// Single-mode reference: with c = cos B, the sigma_x pair gives
// rho_eg(+) - rho_eg(-) = (1 + 2 c (V - xi^4 / V) + V^4 + 2 xi^4) / 4.
double single_mode_distance(double a2, double w, double t) {
    const double xi = std::exp(-a2 / 2);
    const double V = std::exp(-a2 * (1 - std::cos(w * t)));
    const double c = std::cos(a2 * std::sin(w * t));
    return std::abs(1 + 2 * c * (V - std::pow(xi, 4) / V) + std::pow(V, 4) + 2 * std::pow(xi, 4)) / 4;
}

} // namespace

TEST_CASE("kick amplitudes") {
    ModeSet m = synthetic_modes({0.5, 2.0});
    m.probe_amplitudes = {0.6, -0.8};
    const KickVector k = kick_amplitudes(m, 0.2);
    CHECK(std::abs(k.alphas[0] - cplx(0.0, 0.2 * 0.6 / std::sqrt(1.0))) < 1e-15);
    CHECK(std::abs(k.alphas[1] - cplx(0.0, -0.2 * 0.8 / std::sqrt(4.0))) < 1e-15);
    CHECK(k.total_strength == doctest::Approx(0.04 * (0.36 / 1.0 + 0.64 / 4.0)).epsilon(1e-14));
    m.frequencies[0] = 1e-9;
    CHECK_THROWS(kick_amplitudes(m, 0.2));
}

TEST_CASE("probe signal against direct sums") {
    const ModeSet m = synthetic_modes({0.3, 1.1, 2.9});
    const KickVector k = kick_from_alphas(alphas({{0.0, 0.3}, {0.2, 0.1}, {0.0, -0.05}}));
    const TimeGrid grid = TimeGrid::make(200.0, 0.05);
    const ProbeSignal s = probe_signal(k, m, grid);
    REQUIRE(s.V.size() == grid.samples());
    double max_dev = 0.0;
    for (std::size_t i = 0; i < grid.samples(); ++i) {
        const double t = grid.at(i);
        double b = 0.0, e = 0.0;
        for (int j = 0; j < 3; ++j) {
            const double a2 = std::norm(k.alphas[j]);
            b += a2 * std::sin(m.frequencies[j] * t);
            e += a2 * (1 - std::cos(m.frequencies[j] * t));
        }
        max_dev = std::max({max_dev, std::abs(s.B[i] - b), std::abs(s.V[i] - std::exp(-e))});
    }
    CHECK(max_dev < 1e-12);
    CHECK(s.xi == doctest::Approx(std::exp(-k.total_strength / 2)).epsilon(1e-15));
}

TEST_CASE("Ramsey map at t = 0 is the identity") {
    const ModeSet m = synthetic_modes({0.7, 1.3});
    const KickVector k = kick_from_alphas(alphas({{0.0, 0.5}, {0.0, 0.3}}));
    for (double theta : {0.0, 0.4, 1.5707963267948966, 2.5}) {
        const QubitState in = QubitState::from_bloch(theta, 0.9);
        CHECK(state_gap(ramsey_map(in, m, k, 0.0), in) < 1e-14);
    }
    const ProbeSignal s = probe_signal(k, m, TimeGrid::make(1.0, 0.1));
    CHECK(trace_distance_closed_form(s, 0) == 1.0);
}

TEST_CASE("zero kick leaves every state invariant") {
    const ModeSet m = synthetic_modes({0.7, 1.3});
    const KickVector k = kick_from_alphas(alphas({0.0, 0.0}));
    const QubitState in = QubitState::from_bloch(1.1, 2.3);
    for (double t : {0.5, 7.0, 123.4}) CHECK(state_gap(ramsey_map(in, m, k, t), in) < 1e-15);
    CHECK(trace_distance_closed_form(1.0, 1.0, 0.0) == 1.0);
}

TEST_CASE("single-mode closed form") {
    const ModeSet m = synthetic_modes({0.8});
    const KickVector k = kick_from_alphas(alphas({{0.0, 0.6}}));
    for (double t : {0.3, 1.0, 2.5, 4.0, 10.0}) {
        const auto [p, q] = ramsey_map(kSigmaXPair, m, k, t);
        CHECK(trace_distance(p, q) == doctest::Approx(single_mode_distance(0.36, 0.8, t)).epsilon(1e-12));
    }
}

TEST_CASE("pure dephasing: sigma_x pair populations agree") {
    const ModeSet m = synthetic_modes({0.3, 1.0, 1.7});
    const KickVector k = kick_from_alphas(alphas({{0.0, 0.4}, {0.0, 0.2}, {0.0, 0.1}}));
    for (double t = 0.0; t < 50.0; t += 0.37) {
        const auto [p, q] = ramsey_map(kSigmaXPair, m, k, t);
        CHECK(std::abs(p.ee - q.ee) < 1e-12);
        CHECK(p.trace() == doctest::Approx(1.0).epsilon(1e-13));
        CHECK_NOTHROW(p.validate(1e-12));
    }
}

TEST_CASE("channel is linear in the input") {
    const ModeSet m = synthetic_modes({0.45, 1.2});
    const KickVector k = kick_from_alphas(alphas({{0.1, 0.4}, {0.0, -0.3}}));
    const RamseyChannel ch(m, k, 3.3);
    const QubitState a = QubitState::from_bloch(0.3, 0.2), b = QubitState::from_bloch(2.0, 4.0);
    QubitState mix;
    mix.ee = 0.25 * a.ee + 0.75 * b.ee;
    mix.gg = 0.25 * a.gg + 0.75 * b.gg;
    mix.eg = 0.25 * a.eg + 0.75 * b.eg;
    const QubitState oa = ch.apply(a), ob = ch.apply(b), om = ch.apply(mix);
    CHECK(std::abs(om.ee - (0.25 * oa.ee + 0.75 * ob.ee)) < 1e-14);
    CHECK(std::abs(om.eg - (0.25 * oa.eg + 0.75 * ob.eg)) < 1e-14);
}

TEST_CASE("closed form equals the general map for the sigma_x pair") {
    const ModeSet m = synthetic_modes({0.2, 0.9, 1.4, 2.2, 3.1});
    const KickVector k = kick_from_alphas(alphas({{0.0, 0.5}, {0.0, 0.3}, {0.0, -0.2}, {0.0, 0.15}, {0.0, 0.1}}));
    const TimeGrid grid = TimeGrid::make(60.0, 0.1);
    const ProbeSignal s = probe_signal(k, m, grid);
    double dev = 0.0;
    for (std::size_t i = 0; i < grid.samples(); i += 7) {
        const auto [p, q] = ramsey_map(kSigmaXPair, m, k, grid.at(i));
        dev = std::max(dev, std::abs(trace_distance(p, q) - trace_distance_closed_form(s, i)));
    }
    CHECK(dev < 1e-12);
}

TEST_CASE("closed form stays within [0, 1] on a chain") {
    ChainParams p;
    p.n_ions = 60;
    p.delta = 1e-3;
    const ModeSet m = chain_spectrum(p);
    const KickVector k = kick_amplitudes(m, p.eta);
    const ProbeSignal s = probe_signal(k, m, TimeGrid::make(300.0, 0.05));
    for (std::size_t i = 0; i < s.V.size(); ++i) {
        const double d = trace_distance_closed_form(s, i);
        CHECK(d >= 0.0);
        CHECK(d <= 1.0 + 1e-15);
    }
}
