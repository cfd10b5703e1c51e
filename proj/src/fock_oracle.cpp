#include "ionprobe/fock_oracle.hpp"

#include "ionprobe/errors.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>

namespace ionprobe {

std::size_t FockConfig::env_dim() const {
    std::size_t dim = 1;
    for (std::size_t k = 0; k < frequencies.size(); ++k) dim *= static_cast<std::size_t>(cutoff + 1);
    return dim;
}

void FockConfig::validate() const {
    if (frequencies.empty() || frequencies.size() > 4) throw ConfigError("fock oracle supports 1 to 4 modes");
    if (alphas.size() != frequencies.size()) throw ConfigError("fock oracle: alphas and frequencies differ in length");
    if (cutoff < 2) throw ConfigError("fock oracle: cutoff must be >= 2");
    if (2.0 * std::pow(cutoff + 1.0, double(frequencies.size())) > 1e6)
        throw ConfigError("fock oracle: Hilbert dimension exceeds 1e6");
}

FockOracle::FockOracle(FockConfig config) : config_(std::move(config)) {
    config_.validate();
    const int d = config_.cutoff + 1;
    Eigen::MatrixXcd lower = Eigen::MatrixXcd::Zero(d, d);  // b
    for (int n = 1; n < d; ++n) lower(n - 1, n) = std::sqrt(double(n));
    const Eigen::MatrixXcd raise = lower.adjoint();
    for (const auto& a : config_.alphas) {
        const Eigen::MatrixXcd generator = a * raise - std::conj(a) * lower;
        displacement_.push_back(generator.exp());
    }

    const std::size_t dim = config_.env_dim();
    energy_.resize(static_cast<Eigen::Index>(dim));
    for (std::size_t idx = 0; idx < dim; ++idx) {
        std::size_t rest = idx;
        double e = 0.0;
        for (double w : config_.frequencies) {
            e += w * static_cast<double>(rest % static_cast<std::size_t>(d));
            rest /= static_cast<std::size_t>(d);
        }
        energy_[static_cast<Eigen::Index>(idx)] = e;
    }
}

// Applies the tensor product of single-mode displacements (or their adjoints).
FockOracle::Vec FockOracle::apply_modes(const Vec& v, bool adjoint) const {
    const Eigen::Index d = config_.cutoff + 1;
    Vec cur = v;
    Eigen::Index stride = 1;
    for (const auto& Dk : displacement_) {
        const Eigen::MatrixXcd M = adjoint ? Eigen::MatrixXcd(Dk.adjoint()) : Dk;
        Vec next = Vec::Zero(cur.size());
        const Eigen::Index block = stride * d;
        for (Eigen::Index outer = 0; outer < cur.size(); outer += block)
            for (Eigen::Index inner = 0; inner < stride; ++inner)
                for (Eigen::Index n = 0; n < d; ++n) {
                    std::complex<double> acc{0.0, 0.0};
                    for (Eigen::Index m = 0; m < d; ++m) acc += M(n, m) * cur[outer + m * stride + inner];
                    next[outer + n * stride + inner] = acc;
                }
        cur = std::move(next);
        stride = block;
    }
    return cur;
}

double FockOracle::leakage(const Vec& e, const Vec& g) const {
    const std::size_t d = static_cast<std::size_t>(config_.cutoff + 1);
    double worst = 0.0;
    std::size_t stride = 1;
    for (std::size_t k = 0; k < config_.frequencies.size(); ++k) {
        double top = 0.0;
        for (Eigen::Index idx = 0; idx < e.size(); ++idx) {
            const std::size_t n = (static_cast<std::size_t>(idx) / stride) % d;
            if (n + 2 >= d) top += std::norm(e[idx]) + std::norm(g[idx]);
        }
        worst = std::max(worst, top);
        stride *= d;
    }
    return worst;
}

FockResult FockOracle::simulate(const QubitState& initial, double t) const {
    const Eigen::Index dim = static_cast<Eigen::Index>(config_.env_dim());
    const double r = 1.0 / std::numbers::sqrt2;
    const std::complex<double> I{0.0, 1.0};

    // mixed inputs are handled through their spectral decomposition
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> spectral(initial.matrix());
    FockResult result;
    result.norm = 0.0;
    Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
    for (int c = 0; c < 2; ++c) {
        const double p = spectral.eigenvalues()[c];
        if (p <= 1e-15) continue;
        const Eigen::Vector2cd amp = spectral.eigenvectors().col(c);

        Vec e = Vec::Zero(dim), g = Vec::Zero(dim);
        e[0] = amp[0];
        g[0] = amp[1];
        // (1 - i A) / sqrt(2), A = sigma+ D + sigma- D^dag
        Vec e1 = r * (e - I * apply_modes(g, false));
        Vec g1 = r * (g - I * apply_modes(e, true));
        result.leakage = std::max(result.leakage, leakage(e1, g1));
        for (Eigen::Index idx = 0; idx < dim; ++idx) {
            const auto phase = std::polar(1.0, -energy_[idx] * t);
            e1[idx] *= phase;
            g1[idx] *= phase;
        }
        // (1 + i A) / sqrt(2)
        const Vec e2 = r * (e1 + I * apply_modes(g1, false));
        const Vec g2 = r * (g1 + I * apply_modes(e1, true));
        result.leakage = std::max(result.leakage, leakage(e2, g2));
        result.norm += p * (e2.squaredNorm() + g2.squaredNorm());

        rho(0, 0) += p * e2.squaredNorm();
        rho(1, 1) += p * g2.squaredNorm();
        rho(0, 1) += p * g2.dot(e2);  // <chi_g|chi_e>
    }
    rho(1, 0) = std::conj(rho(0, 1));
    if (result.leakage >= kMaxLeakage)
        throw NumericalError("fock oracle: leakage " + std::to_string(result.leakage) +
                             " into the top Fock levels; increase cutoff");
    result.state = QubitState::from_matrix(rho);
    return result;
}

std::complex<double> FockOracle::vacuum_displacement_overlap() const {
    std::complex<double> v{1.0, 0.0};
    for (const auto& Dk : displacement_) v *= Dk(0, 0);
    return v;
}

} // namespace ionprobe
