#include "ionprobe/chain_spectrum.hpp"

#include "ionprobe/errors.hpp"
#include "ionprobe/ring_potential.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace ionprobe {
namespace {

constexpr double kProbeCoupled = 1e-12;   // |S_1j| below this: mode does not see the kick
constexpr double kZeroModeAmplitude = 1e-10;

void finalize(ModeSet& modes) {
    std::vector<std::size_t> order(modes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return modes.frequencies[a] < modes.frequencies[b];
    });
    ModeSet sorted;
    sorted.discarded = modes.discarded;
    for (auto i : order) {
        sorted.frequencies.push_back(modes.frequencies[i]);
        sorted.probe_amplitudes.push_back(modes.probe_amplitudes[i]);
        sorted.labels.push_back(modes.labels[i]);
    }
    modes = std::move(sorted);
    if (!modes.empty()) soft_mode_gap(modes);
}

} // namespace

void ChainParams::validate() const {
    if (n_ions < 4 || n_ions % 2 != 0)
        throw ConfigError("n_ions must be an even integer >= 4, got " + std::to_string(n_ions));
    if (!(std::abs(delta) >= kMinAbsDelta))
        throw ConfigError("|delta| must be >= 1e-7 (exactly critical chains are not admitted)");
    if (!(delta > -1.0)) throw ConfigError("delta must exceed -1 (nu_t > 0)");
    if (!(eta >= 0.0)) throw ConfigError("eta must be non-negative");
    if (neighbor_cutoff < 0 || neighbor_cutoff > n_ions / 2)
        throw ConfigError("neighbor_cutoff must lie in [0, n_ions/2] (0 selects n_ions/2)");
    if (!(omega_floor > 0.0)) throw ConfigError("omega_floor must be positive");
}

double zeta3() {
    // zeta(3) = 5/2 sum_{n>=1} (-1)^(n+1) / (n^3 binom(2n, n)); terms shrink by ~1/4
    double sum = 0.0;
    double binom = 1.0;
    for (int n = 1; n <= 40; ++n) {
        binom *= 2.0 * (2.0 * n - 1.0) / n;
        const double term = 1.0 / (double(n) * n * n * binom);
        sum += (n % 2 == 1) ? term : -term;
    }
    return 2.5 * sum;
}

double critical_frequency() { return std::sqrt(3.5 * zeta3()); }

double pair_multiplicity(int n, int n_ions) {
    return (n_ions > 0 && 2 * n == n_ions) ? 1.0 : 2.0;
}

double ring_critical_frequency(int n_ions, int cutoff) {
    // omega^2(pi) = nu_t^2 - 2 sum_{odd n} m_n / n^3
    double sum = 0.0;
    for (int n = cutoff - (cutoff % 2 == 0 ? 1 : 0); n >= 1; n -= 2)
        sum += pair_multiplicity(n, n_ions) / (double(n) * n * n);
    return std::sqrt(2.0 * sum);
}

double transverse_trap_frequency(const ChainParams& params) {
    return ring_critical_frequency(params.n_ions, params.cutoff()) * (1.0 + params.delta);
}

double transverse_dispersion_sq(double k, double nu_t, int cutoff, int n_ions) {
    double sum = 0.0;
    // smallest terms first
    for (int n = cutoff; n >= 1; --n) {
        const double s = std::sin(0.5 * n * k);
        sum += pair_multiplicity(n, n_ions) * s * s / (double(n) * n * n);
    }
    return nu_t * nu_t - 2.0 * sum;
}

ModeSet linear_spectrum(const ChainParams& params) {
    params.validate();
    if (params.delta < kMinAbsDelta)
        throw ConfigError("linear_spectrum requires delta >= 1e-7 (linear phase)");
    const int N = params.n_ions;
    const double nu_t = transverse_trap_frequency(params);
    const double norm1 = 1.0 / std::sqrt(double(N));
    const double norm2 = std::sqrt(2.0 / N);

    ModeSet modes;
    for (int m = 0; m <= N / 2; ++m) {
        const double k = 2.0 * std::numbers::pi * m / N;
        const double w2 = transverse_dispersion_sq(k, nu_t, params.cutoff(), N);
        if (!(w2 >= params.omega_floor * params.omega_floor))
            throw NumericalError("linear mode k_index=" + std::to_string(m) +
                                 " falls below omega_floor");
        const double w = std::sqrt(w2);
        auto push = [&](double s, const char* branch) {
            modes.frequencies.push_back(w);
            modes.probe_amplitudes.push_back(s);
            modes.labels.push_back({m, branch});
        };
        if (m == 0) {
            push(norm1, "y-uniform");
        } else if (2 * m == N) {
            push(-norm1, "y-staggered");  // (-1)^i / sqrt(N) at i = 1
        } else {
            push(norm2 * std::cos(k), "y-cos");
            push(norm2 * std::sin(k), "y-sin");
        }
    }
    finalize(modes);
    return modes;
}

double zigzag_energy(const ChainParams& params, double b) {
    const double nu_t = transverse_trap_frequency(params);
    double coulomb = 0.0;
    for (int n = params.cutoff(); n >= 1; --n) {
        const double dy2 = (n % 2 == 1) ? b * b : 0.0;
        coulomb += 0.5 * pair_multiplicity(n, params.n_ions) / std::sqrt(double(n) * n + dy2);
    }
    return 0.5 * nu_t * nu_t * 0.25 * b * b + coulomb;
}

ZigzagEquilibrium zigzag_equilibrium(const ChainParams& params) {
    params.validate();
    const double nu_t = transverse_trap_frequency(params);
    const int cutoff = params.cutoff();
    // dU/db = b * g(b); g increases monotonically, so the minimum is its unique root
    auto g = [&](double b) {
        double sum = 0.0;
        for (int n = cutoff - (cutoff % 2 == 0 ? 1 : 0); n >= 1; n -= 2) {
            const double r2 = double(n) * n + b * b;
            sum += 0.5 * pair_multiplicity(n, params.n_ions) / (r2 * std::sqrt(r2));
        }
        return 0.25 * nu_t * nu_t - sum;
    };

    ZigzagEquilibrium eq;
    if (g(0.0) >= 0.0) {
        eq.b = 0.0;
        eq.energy = zigzag_energy(params, 0.0);
        eq.converged = true;
        return eq;
    }
    double lo = 0.0, hi = 1.0;
    for (int i = 0; g(hi) < 0.0; ++i) {
        if (i > 60) throw NumericalError("zigzag_equilibrium: failed to bracket the minimum");
        lo = hi;
        hi *= 2.0;
    }
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) < 0.0 ? lo : hi) = mid;
    }
    eq.b = 0.5 * (lo + hi);
    if (!(hi - lo <= 1e-12 * eq.b)) throw NumericalError("zigzag_equilibrium: minimizer did not converge");

    // U'' = b g'(b) at the root
    const double h = 1e-6 * std::max(eq.b, 1e-6);
    const double curvature = eq.b * (g(eq.b + h) - g(eq.b - h)) / (2.0 * h);
    if (!(curvature > 0.0)) throw NumericalError("zigzag_equilibrium: non-positive curvature at minimum");
    eq.energy = zigzag_energy(params, eq.b);
    eq.converged = true;
    return eq;
}

ModeSet zigzag_spectrum(const ChainParams& params, const ZigzagEquilibrium& eq) {
    params.validate();
    if (!eq.converged) throw std::invalid_argument("zigzag_spectrum: equilibrium not converged");
    const int N = params.n_ions;
    const RingGeometry ring{N, params.cutoff(), transverse_trap_frequency(params)};
    const Eigen::MatrixXd H = ring_hessian(ring, zigzag_displacement(N, eq.b));

    const double asym = (H - H.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-10) throw NumericalError("zigzag_spectrum: Hessian asymmetry " + std::to_string(asym));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(H);
    if (solver.info() != Eigen::Success) throw NumericalError("zigzag_spectrum: eigensolver failed");
    const Eigen::VectorXd& lambda = solver.eigenvalues();
    const Eigen::MatrixXd& V = solver.eigenvectors();

    const double gram_dev =
        (V.transpose() * V - Eigen::MatrixXd::Identity(2 * N, 2 * N)).cwiseAbs().maxCoeff();
    if (gram_dev > 1e-10) throw NumericalError("zigzag_spectrum: eigenvectors not orthonormal");

    // plane-wave tables for the momentum label, indexed by (m * i) mod N
    std::vector<double> cos_t(N), sin_t(N);
    for (int q = 0; q < N; ++q) {
        cos_t[q] = std::cos(2.0 * std::numbers::pi * q / N);
        sin_t[q] = std::sin(2.0 * std::numbers::pi * q / N);
    }
    auto label_of = [&](const Eigen::VectorXd& v) {
        int best_m = 0;
        double best_p = -1.0;
        for (int m = 0; m <= N / 2; ++m) {
            double p = 0.0;
            for (int c = 0; c < 2; ++c) {
                double re = 0.0, im = 0.0;
                for (int i = 0; i < N; ++i) {
                    const int q = (m * i) % N;
                    re += v[2 * i + c] * cos_t[q];
                    im += v[2 * i + c] * sin_t[q];
                }
                p += re * re + im * im;
            }
            if (p > best_p + 1e-12) {
                best_p = p;
                best_m = m;
            }
        }
        double wy = 0.0;
        for (int i = 0; i < N; ++i) wy += v[2 * i + 1] * v[2 * i + 1];
        const bool upper = 4 * best_m > N;
        const int folded = upper ? N / 2 - best_m : best_m;
        std::string branch = std::string("zz-") + (wy >= 0.5 ? "y" : "x") + (upper ? "-b" : "-a");
        return ModeLabel{folded, std::move(branch)};
    };

    const double floor2 = params.omega_floor * params.omega_floor;
    ModeSet modes;
    for (Eigen::Index j = 0; j < lambda.size(); ++j) {
        const double s = V(1, j);
        if (lambda[j] < floor2) {
            if (std::abs(s) < kZeroModeAmplitude) {
                ++modes.discarded;
                continue;
            }
            throw NumericalError("zigzag_spectrum: probe-coupled eigenvalue " +
                                 std::to_string(lambda[j]) + " below omega_floor^2");
        }
        if (std::abs(s) < kProbeCoupled) {
            ++modes.discarded;
            continue;
        }
        modes.frequencies.push_back(std::sqrt(lambda[j]));
        modes.probe_amplitudes.push_back(s);
        modes.labels.push_back(label_of(V.col(j)));
    }
    finalize(modes);
    return modes;
}

ModeSet chain_spectrum(const ChainParams& params) {
    params.validate();
    if (params.delta > 0.0) return linear_spectrum(params);
    return zigzag_spectrum(params, zigzag_equilibrium(params));
}

double soft_mode_gap(ModeSet& modes) {
    if (modes.empty()) throw std::invalid_argument("soft_mode_gap: empty ModeSet");
    std::size_t best = modes.size();
    for (std::size_t j = 0; j < modes.size(); ++j) {
        if (std::abs(modes.probe_amplitudes[j]) < kProbeCoupled) continue;
        if (best == modes.size() || modes.frequencies[j] < modes.frequencies[best]) best = j;
    }
    if (best == modes.size()) throw std::invalid_argument("soft_mode_gap: no probe-coupled mode");
    modes.soft_index = best;
    return modes.frequencies[best];
}

} // namespace ionprobe
