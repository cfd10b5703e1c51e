#pragma once

// Equilibrium structure and transverse phonon modes of a ring-periodic ion
// chain on both sides of the linear-to-zigzag instability.
//
// Units: Coulomb frequency w0 = sqrt(Q^2 / m a^3) = 1, lattice spacing a = 1,
// hbar = m = 1. The probe is ion 1; since the ring is translation invariant
// it is stored at array index 0.

#include <cstddef>
#include <string>
#include <vector>

namespace ionprobe {

/// Lamb-Dicke parameter of the probe kick.
inline constexpr double kDefaultEta = 0.5;

struct ChainParams {
    int n_ions = 100;
    /// Tuning parameter nu_t / nu_c(N) - 1, referenced to the instability
    /// point of the modelled ring (see ring_critical_frequency).
    double delta = 0.1;
    double eta = kDefaultEta;
    /// Largest |i - j| entering the Coulomb sums; 0 selects n_ions / 2.
    int neighbor_cutoff = 0;
    double omega_floor = 1e-6;

    int cutoff() const { return neighbor_cutoff > 0 ? neighbor_cutoff : n_ions / 2; }
    /// Throws ConfigError when an invariant is violated.
    void validate() const;
};

/// Smallest admissible |delta|; exactly critical chains are rejected.
inline constexpr double kMinAbsDelta = 1e-7;

struct ModeLabel {
    int k_index = 0;      ///< momentum index n with k = 2 pi n / N
    std::string branch;   ///< parity / polarisation tag
};

struct ModeSet {
    std::vector<double> frequencies;       ///< ascending, units of w0
    std::vector<double> probe_amplitudes;  ///< y-component of mode j at the probe
    std::vector<ModeLabel> labels;
    std::size_t soft_index = 0;
    std::size_t discarded = 0;             ///< near-zero modes dropped (no probe weight)

    std::size_t size() const { return frequencies.size(); }
    bool empty() const { return frequencies.empty(); }
};

struct ZigzagEquilibrium {
    double b = 0.0;        ///< full transverse zigzag separation (units of a)
    double energy = 0.0;   ///< potential energy per ion at the minimum
    bool converged = false;
};

double zeta3();

/// nu_c / w0 = sqrt(7 zeta(3) / 2) of the infinite chain.
double critical_frequency();

/// Instability point of a ring with n_ions ions and the given Coulomb cutoff:
/// the nu_t at which the k = pi/a transverse mode vanishes.
double ring_critical_frequency(int n_ions, int cutoff);

/// nu_t for the given parameters, nu_c(N) * (1 + delta).
double transverse_trap_frequency(const ChainParams& params);

/// Weight of the pair at separation n in a ring of n_ions: the antipodal
/// pair (n = N/2) is a single pair, every other separation appears twice.
/// n_ions <= 0 means an unbounded chain.
double pair_multiplicity(int n, int n_ions);

/// omega^2(k) = nu_t^2 - 2 sum_n m_n sin^2(n k / 2) / n^3, with m_n the pair
/// multiplicity (2 except at the antipode).
double transverse_dispersion_sq(double k, double nu_t, int cutoff, int n_ions = 0);

ModeSet linear_spectrum(const ChainParams& params);

/// Per-ion potential energy of the planar zigzag ansatz with separation b.
double zigzag_energy(const ChainParams& params, double b);

ZigzagEquilibrium zigzag_equilibrium(const ChainParams& params);

/// Normal modes from the full 2N x 2N in-plane Hessian at the given
/// equilibrium. eq.b = 0 is accepted for any delta (forced linear geometry).
ModeSet zigzag_spectrum(const ChainParams& params, const ZigzagEquilibrium& eq);

/// Linear or zigzag spectrum depending on the sign of delta.
ModeSet chain_spectrum(const ChainParams& params);

/// Minimum probe-coupled frequency; also stores its position in soft_index.
double soft_mode_gap(ModeSet& modes);

} // namespace ionprobe
