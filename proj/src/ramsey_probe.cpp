#include "ionprobe/ramsey_probe.hpp"

#include "ionprobe/errors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ionprobe {
namespace {

using Branch = std::vector<DisplacedVacuum>;

struct Conditional {
    Branch e;  // phonon state attached to |e>
    Branch g;  // phonon state attached to |g>
};

Branch scaled_displaced(const Branch& in, const Eigen::VectorXcd& d, cplx factor) {
    Branch out;
    out.reserve(in.size());
    for (const auto& term : in) {
        auto moved = displace(term, d);
        moved.weight *= factor;
        out.push_back(std::move(moved));
    }
    return out;
}

Branch scaled(Branch in, cplx factor) {
    for (auto& term : in) term.weight *= factor;
    return in;
}

Branch concat(Branch a, const Branch& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// exp(-i (pi/4) s (sigma+ D + sigma- D^dag)) = (1 - i s A) / sqrt(2), since A^2 = 1.
Conditional pulse(const Conditional& in, const Eigen::VectorXcd& alpha, double sign) {
    const cplx c{0.0, -sign};
    const double r = 1.0 / std::numbers::sqrt2;
    Conditional out;
    out.e = concat(scaled(in.e, r), scaled_displaced(in.g, alpha, c * r));
    out.g = concat(scaled(in.g, r), scaled_displaced(in.e, -alpha, c * r));
    return out;
}

Conditional free_evolution(const Conditional& in, std::span<const double> w, double t) {
    Conditional out;
    for (const auto& term : in.e) out.e.push_back(evolve(term, w, t));
    for (const auto& term : in.g) out.g.push_back(evolve(term, w, t));
    return out;
}

cplx branch_overlap(const Branch& bra, const Branch& ket) {
    cplx sum{0.0, 0.0};
    for (const auto& a : bra)
        for (const auto& b : ket) sum += overlap(a, b);
    return sum;
}

} // namespace

KickVector kick_amplitudes(const ModeSet& modes, double eta, double omega_floor) {
    if (modes.probe_amplitudes.size() != modes.frequencies.size())
        throw std::invalid_argument("kick_amplitudes: inconsistent ModeSet");
    KickVector kick;
    kick.alphas.resize(static_cast<Eigen::Index>(modes.size()));
    for (std::size_t j = 0; j < modes.size(); ++j) {
        const double w = modes.frequencies[j];
        if (!(w >= omega_floor)) throw NumericalError("kick_amplitudes: frequency below omega_floor");
        kick.alphas[static_cast<Eigen::Index>(j)] =
            cplx{0.0, eta * std::sqrt(0.5 / w) * modes.probe_amplitudes[j]};
    }
    kick.total_strength = kick.alphas.squaredNorm();
    return kick;
}

KickVector kick_from_alphas(Eigen::VectorXcd alphas) {
    KickVector kick;
    kick.total_strength = alphas.squaredNorm();
    kick.alphas = std::move(alphas);
    return kick;
}

ModeSet synthetic_modes(std::vector<double> frequencies) {
    ModeSet modes;
    modes.probe_amplitudes.assign(frequencies.size(), 0.0);
    for (std::size_t j = 0; j < frequencies.size(); ++j)
        modes.labels.push_back({static_cast<int>(j), "synthetic"});
    modes.frequencies = std::move(frequencies);
    return modes;
}

ProbeSignal probe_signal(const KickVector& kick, const ModeSet& modes, const TimeGrid& grid) {
    if (static_cast<std::size_t>(kick.alphas.size()) != modes.size())
        throw std::invalid_argument("probe_signal: kick and mode set differ in length");
    const std::size_t n = grid.samples();
    ProbeSignal sig;
    sig.xi = std::exp(-0.5 * kick.total_strength);
    sig.B.assign(n, 0.0);
    std::vector<double> exponent(n, 0.0);

    // exp(i w t) advanced by repeated rotation, re-seeded exactly every block
    constexpr std::size_t kReseed = 512;
    for (std::size_t j = 0; j < modes.size(); ++j) {
        const double a2 = std::norm(kick.alphas[static_cast<Eigen::Index>(j)]);
        if (a2 == 0.0) continue;
        const double w = modes.frequencies[j];
        const cplx step = std::polar(1.0, w * grid.dtau);
        cplx z{1.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) {
            if (i % kReseed == 0) z = std::polar(1.0, w * grid.at(i));
            exponent[i] += a2 * (1.0 - z.real());
            sig.B[i] += a2 * z.imag();
            z *= step;
        }
    }
    sig.V.resize(n);
    for (std::size_t i = 0; i < n; ++i) sig.V[i] = std::exp(-exponent[i]);
    return sig;
}

RamseyChannel::RamseyChannel(const ModeSet& modes, const KickVector& kick, double t) {
    if (t < 0.0) throw std::invalid_argument("RamseyChannel: negative time");
    const auto n = static_cast<Eigen::Index>(modes.size());
    if (kick.alphas.size() != n) throw std::invalid_argument("RamseyChannel: kick and mode set differ in length");

    std::array<Conditional, 2> branches;
    for (int a = 0; a < 2; ++a) {
        Conditional start;
        (a == 0 ? start.e : start.g).push_back(DisplacedVacuum::vacuum(n));
        auto s = pulse(start, kick.alphas, +1.0);
        s = free_evolution(s, modes.frequencies, t);
        branches[a] = pulse(s, kick.alphas, -1.0);
    }
    for (int x = 0; x < 2; ++x)
        for (int a = 0; a < 2; ++a)
            for (int y = 0; y < 2; ++y)
                for (int b = 0; b < 2; ++b) {
                    const Branch& ket = x == 0 ? branches[a].e : branches[a].g;
                    const Branch& bra = y == 0 ? branches[b].e : branches[b].g;
                    gram_[((x * 2 + a) * 2 + y) * 2 + b] = branch_overlap(bra, ket);
                }
}

QubitState RamseyChannel::apply(const QubitState& in) const {
    const Eigen::Matrix2cd rho = in.matrix();
    Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) out(x, y) += rho(a, b) * gram(x, a, y, b);
    return QubitState::from_matrix(out);
}

QubitState ramsey_map(const QubitState& initial, const ModeSet& modes, const KickVector& kick, double t) {
    return RamseyChannel(modes, kick, t).apply(initial);
}

std::pair<QubitState, QubitState> ramsey_map(const BlochPair& pair, const ModeSet& modes,
                                             const KickVector& kick, double t) {
    const RamseyChannel channel(modes, kick, t);
    return {channel.apply(pair.first()), channel.apply(pair.second())};
}

double trace_distance_closed_form(double xi, double V, double B) {
    // 1 + 2 cos B (V - xi^4/V) + V^4 + 2 xi^4, grouped so that t = 0 gives 4 exactly
    const double xi4 = xi * xi * xi * xi;
    const double c = std::cos(B);
    const double V4 = V * V * V * V;
    return 0.25 * std::abs(1.0 + V4 + 2.0 * c * V + 2.0 * xi4 * (1.0 - c / V));
}

double trace_distance_closed_form(const ProbeSignal& signal, std::size_t i) {
    return trace_distance_closed_form(signal.xi, signal.V.at(i), signal.B.at(i));
}

} // namespace ionprobe
