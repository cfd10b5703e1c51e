#pragma once

// Reduced probe dynamics for the pi/2 - free evolution - (-pi/2) Ramsey
// sequence. The conditional phonon states are superpositions of displaced
// vacua, so every quantity below is exact for any number of modes.

#include "ionprobe/chain_spectrum.hpp"
#include "ionprobe/coherent_algebra.hpp"
#include "ionprobe/qubit_state.hpp"
#include "ionprobe/time_grid.hpp"

#include <array>
#include <utility>
#include <vector>

namespace ionprobe {

struct KickVector {
    Eigen::VectorXcd alphas;      ///< alpha_j = i eta S_1j / sqrt(2 w_j)
    double total_strength = 0.0;  ///< sum_j |alpha_j|^2
};

KickVector kick_amplitudes(const ModeSet& modes, double eta, double omega_floor = 1e-6);

/// Kick vector with explicitly given amplitudes (synthetic mode sets).
KickVector kick_from_alphas(Eigen::VectorXcd alphas);

/// Mode set with given frequencies and no chain behind it; probe
/// amplitudes are set to zero and labels left generic.
ModeSet synthetic_modes(std::vector<double> frequencies);

struct ProbeSignal {
    double xi = 1.0;              ///< exp(-sum |alpha|^2 / 2)
    std::vector<double> B;        ///< sum |alpha_j|^2 sin(w_j t)
    std::vector<double> V;        ///< exp(-sum |alpha_j|^2 (1 - cos w_j t))
};

ProbeSignal probe_signal(const KickVector& kick, const ModeSet& modes, const TimeGrid& grid);

/// The Ramsey channel at one time. For the basis inputs |e>, |g> it holds the
/// conditional phonon branches (at most four displaced vacua each) and their
/// Gram matrix, from which any input state is mapped linearly.
class RamseyChannel {
public:
    RamseyChannel(const ModeSet& modes, const KickVector& kick, double t);

    QubitState apply(const QubitState& input) const;

    /// <Y_b | X_a> with X, Y in {e, g} (output level) and a, b in {e, g}
    /// (input level), indexed as gram(X, a, Y, b) with e = 0, g = 1.
    cplx gram(int x, int a, int y, int b) const { return gram_[((x * 2 + a) * 2 + y) * 2 + b]; }

private:
    std::array<cplx, 16> gram_{};
};

QubitState ramsey_map(const QubitState& initial, const ModeSet& modes, const KickVector& kick, double t);
/// Both members of an antipodal pair, mapped through the same channel.
std::pair<QubitState, QubitState> ramsey_map(const BlochPair& pair, const ModeSet& modes,
                                             const KickVector& kick, double t);

/// D_opt for the sigma_x pair from xi, V and B.
double trace_distance_closed_form(double xi, double V, double B);
double trace_distance_closed_form(const ProbeSignal& signal, std::size_t i);

} // namespace ionprobe
