#pragma once

#include "ionprobe/chain_spectrum.hpp"
#include "ionprobe/time_grid.hpp"

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace ionprobe {

/// Default observation windows in units of 1/w0.
inline constexpr double kShortWindow = 150.0;
inline constexpr double kLongWindow = 3000.0;

/// Everything a CLI run needs. Parsed from `key = value` lines whose keys
/// are exactly the field names below.
struct RunConfig {
    // chain
    int n_ions = 100;
    double delta = 0.1;
    double eta = kDefaultEta;
    int neighbor_cutoff = 0;
    double omega_floor = 1e-6;
    // time grid
    double tau_max = kShortWindow;
    double dtau = 0.05;
    // delta sweep; empty delta_values means log-spaced defaults on both sides
    std::vector<double> delta_values;
    double delta_min = 1e-7;
    double delta_max = 1e-1;
    int points_per_decade = 7;
    // size sweep
    std::vector<int> n_values{20, 50, 100, 200, 400};
    double size_delta = 1e-5;
    // initial pair (sigma_x pair by default) and pair-optimisation grid
    double pair_theta = 1.5707963267948966;
    double pair_phi = 0.0;
    int n_theta = 9;
    int n_phi = 12;
    // revival detection
    double prominence = 0.05;
    std::string output = "-";

    ChainParams chain() const;
    ChainParams chain(int n, double d) const;
    TimeGrid grid() const;
    /// delta_values, or the generated two-sided log grid when empty (sorted).
    std::vector<double> sweep_deltas() const;
    bool uses_sigma_x_pair() const;

    /// Throws ConfigError on any out-of-range value.
    void validate() const;
};

/// Parses config text. Errors carry the 1-based line number.
RunConfig parse_config(std::istream& in, RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});
/// Applies one `key=value` assignment.
void apply_override(RunConfig& config, std::string_view assignment);
/// Writes the config back in the same `key = value` format.
std::string dump_config(const RunConfig& config);

} // namespace ionprobe
