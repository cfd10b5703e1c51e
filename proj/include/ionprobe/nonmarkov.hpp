#pragma once

// Trace distance, the information-backflow (BLP) functional over a sampled
// trace-distance series, and its maximisation over antipodal initial pairs.

#include "ionprobe/qubit_state.hpp"
#include "ionprobe/ramsey_probe.hpp"
#include "ionprobe/time_grid.hpp"

#include <span>
#include <vector>

namespace ionprobe {

double trace_distance(const QubitState& r1, const QubitState& r2);
/// General 2x2 version; rejects inputs that are not Hermitian to 1e-8.
double trace_distance(const Eigen::Matrix2cd& r1, const Eigen::Matrix2cd& r2);

struct BLPResult {
    double measure = 0.0;           ///< sum of positive increments of D
    BlochPair pair = kSigmaXPair;
    std::vector<double> series;
    int n_revivals = 0;             ///< maximal runs of positive increments
};

BLPResult blp_measure(std::span<const double> series);

/// D(t) for an arbitrary antipodal pair through the general Ramsey map.
std::vector<double> pair_trace_distance(const BlochPair& pair, const ModeSet& modes,
                                        const KickVector& kick, const TimeGrid& grid, int threads = 1);

struct PairScanEntry {
    double theta = 0.0;
    double phi = 0.0;
    double measure = 0.0;
};

struct PairScan {
    BlochPair best = kSigmaXPair;
    double best_measure = 0.0;
    std::vector<PairScanEntry> map;  ///< row-major in (theta, phi)
};

/// theta_i = pi (i + 1) / (n_theta + 1), phi_j = 2 pi j / n_phi. Odd n_theta
/// places theta = pi/2 on the grid. Ties go to the sigma_x pair, then to the
/// lexicographically first (theta, phi).
PairScan optimize_pair(const ModeSet& modes, const KickVector& kick, const TimeGrid& grid,
                       int n_theta, int n_phi, int threads = 1);

} // namespace ionprobe
