#pragma once

#include <cstddef>

namespace ionprobe {

/// Uniform grid tau_i = i * dtau, i = 0..count, with count * dtau = tau_max.
struct TimeGrid {
    double tau_max = 0.0;
    double dtau = 0.05;
    std::size_t count = 0;

    /// Throws ConfigError unless dtau in (0, 0.1] and tau_max is a whole
    /// number of steps (to 1e-9 relative).
    static TimeGrid make(double tau_max, double dtau);

    std::size_t samples() const { return count + 1; }
    double at(std::size_t i) const { return static_cast<double>(i) * dtau; }
};

} // namespace ionprobe
