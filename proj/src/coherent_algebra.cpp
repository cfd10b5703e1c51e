#include "ionprobe/coherent_algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace ionprobe {
namespace {

void require_same_size(Eigen::Index a, Eigen::Index b, const char* where) {
    if (a != b) throw std::invalid_argument(std::string(where) + ": mode count mismatch");
}

} // namespace

DisplacedVacuum displace(const DisplacedVacuum& state, const Eigen::VectorXcd& d) {
    require_same_size(state.size(), d.size(), "displace");
    // (d gamma^* - d^* gamma) / 2 = i Im(sum d gamma^*)
    const double angle = state.amplitudes.dot(d).imag();  // dot conjugates its first argument
    DisplacedVacuum out;
    out.amplitudes = state.amplitudes + d;
    out.phase = state.phase * std::polar(1.0, angle);
    out.weight = state.weight;
    return out;
}

DisplacedVacuum evolve(const DisplacedVacuum& state, std::span<const double> frequencies, double t) {
    require_same_size(state.size(), static_cast<Eigen::Index>(frequencies.size()), "evolve");
    DisplacedVacuum out = state;
    for (Eigen::Index j = 0; j < out.size(); ++j)
        out.amplitudes[j] *= std::polar(1.0, -frequencies[static_cast<std::size_t>(j)] * t);
    return out;
}

cplx overlap(const DisplacedVacuum& a, const DisplacedVacuum& b) {
    require_same_size(a.size(), b.size(), "overlap");
    const cplx exponent = -0.5 * a.amplitudes.squaredNorm() - 0.5 * b.amplitudes.squaredNorm() +
                          a.amplitudes.dot(b.amplitudes);
    return std::conj(a.phase) * b.phase * std::conj(a.weight) * b.weight * std::exp(exponent);
}

} // namespace ionprobe
