#include "ionprobe/run_config.hpp"

#include "ionprobe/csv.hpp"
#include "ionprobe/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

namespace ionprobe {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <class T>
T parse_scalar(std::string_view text) {
    text = trim(text);
    if (text.size() > 1 && text.front() == '+') text.remove_prefix(1);
    T value{};
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw ConfigError("cannot parse '" + std::string(text) + "'");
    return value;
}

template <class T>
std::vector<T> parse_list(std::string_view text) {
    std::vector<T> out;
    text = trim(text);
    if (text.empty()) return out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        out.push_back(parse_scalar<T>(item));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

template <class T>
std::string join(const std::vector<T>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        if constexpr (std::is_floating_point_v<T>) out += format_number(values[i]);
        else out += std::to_string(values[i]);
    }
    return out;
}

struct Field {
    std::function<void(RunConfig&, std::string_view)> set;
    std::function<std::string(const RunConfig&)> get;
};

template <class T>
Field scalar(T RunConfig::*member) {
    return {[member](RunConfig& c, std::string_view v) { c.*member = parse_scalar<T>(v); },
            [member](const RunConfig& c) {
                if constexpr (std::is_floating_point_v<T>) return format_number(c.*member);
                else return std::to_string(c.*member);
            }};
}

template <class T>
Field list(std::vector<T> RunConfig::*member) {
    return {[member](RunConfig& c, std::string_view v) { c.*member = parse_list<T>(v); },
            [member](const RunConfig& c) { return join(c.*member); }};
}

const std::map<std::string, Field, std::less<>>& fields() {
    static const std::map<std::string, Field, std::less<>> table{
        {"n_ions", scalar(&RunConfig::n_ions)},
        {"delta", scalar(&RunConfig::delta)},
        {"eta", scalar(&RunConfig::eta)},
        {"neighbor_cutoff", scalar(&RunConfig::neighbor_cutoff)},
        {"omega_floor", scalar(&RunConfig::omega_floor)},
        {"tau_max", scalar(&RunConfig::tau_max)},
        {"dtau", scalar(&RunConfig::dtau)},
        {"delta_values", list(&RunConfig::delta_values)},
        {"delta_min", scalar(&RunConfig::delta_min)},
        {"delta_max", scalar(&RunConfig::delta_max)},
        {"points_per_decade", scalar(&RunConfig::points_per_decade)},
        {"n_values", list(&RunConfig::n_values)},
        {"size_delta", scalar(&RunConfig::size_delta)},
        {"pair_theta", scalar(&RunConfig::pair_theta)},
        {"pair_phi", scalar(&RunConfig::pair_phi)},
        {"n_theta", scalar(&RunConfig::n_theta)},
        {"n_phi", scalar(&RunConfig::n_phi)},
        {"prominence", scalar(&RunConfig::prominence)},
        {"output", {[](RunConfig& c, std::string_view v) { c.output = std::string(trim(v)); },
                    [](const RunConfig& c) { return c.output; }}},
    };
    return table;
}

void assign(RunConfig& config, std::string_view key, std::string_view value) {
    const auto it = fields().find(key);
    if (it == fields().end()) throw ConfigError("unknown key '" + std::string(key) + "'");
    try {
        it->second.set(config, value);
    } catch (const ConfigError& e) {
        throw ConfigError("key '" + std::string(key) + "': " + e.what());
    }
}

} // namespace

ChainParams RunConfig::chain() const { return chain(n_ions, delta); }

ChainParams RunConfig::chain(int n, double d) const {
    ChainParams p;
    p.n_ions = n;
    p.delta = d;
    p.eta = eta;
    p.neighbor_cutoff = neighbor_cutoff;
    p.omega_floor = omega_floor;
    return p;
}

TimeGrid RunConfig::grid() const { return TimeGrid::make(tau_max, dtau); }

std::vector<double> RunConfig::sweep_deltas() const {
    std::vector<double> out = delta_values;
    if (out.empty()) {
        const double decades = std::log10(delta_max / delta_min);
        const int steps = static_cast<int>(std::lround(decades * points_per_decade));
        for (int i = 0; i <= steps; ++i) {
            const double mag = i == steps ? delta_max : delta_min * std::pow(10.0, decades * i / steps);
            out.push_back(mag);
            out.push_back(-mag);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool RunConfig::uses_sigma_x_pair() const {
    return std::abs(pair_theta - std::numbers::pi / 2) < 1e-9 && std::abs(pair_phi) < 1e-9;
}

void RunConfig::validate() const {
    chain().validate();
    (void)grid();
    if (!(delta_min >= kMinAbsDelta) || !(delta_max <= 0.1 + 1e-15) || !(delta_min < delta_max))
        throw ConfigError("delta_min/delta_max must satisfy 1e-7 <= delta_min < delta_max <= 0.1");
    if (points_per_decade < 1) throw ConfigError("points_per_decade must be >= 1");
    for (double d : delta_values)
        if (!(std::abs(d) >= kMinAbsDelta) || !(std::abs(d) <= 0.1 + 1e-15))
            throw ConfigError("delta_values entries must satisfy 1e-7 <= |delta| <= 0.1");
    for (int n : n_values)
        if (n < 8 || n % 2 != 0) throw ConfigError("n_values entries must be even and >= 8");
    if (!(std::abs(size_delta) >= kMinAbsDelta)) throw ConfigError("|size_delta| must be >= 1e-7");
    if (!(pair_theta >= 0.0 && pair_theta <= std::numbers::pi)) throw ConfigError("pair_theta must lie in [0, pi]");
    if (!(pair_phi >= 0.0 && pair_phi < 2.0 * std::numbers::pi)) throw ConfigError("pair_phi must lie in [0, 2 pi)");
    if (n_theta < 3 || n_phi < 4) throw ConfigError("n_theta >= 3 and n_phi >= 4 required");
    if (!(prominence > 0.0)) throw ConfigError("prominence must be positive");
    if (output.empty()) throw ConfigError("output must not be empty ('-' for stdout)");
}

RunConfig parse_config(std::istream& in, RunConfig config) {
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::string_view view = line;
        if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        view = trim(view);
        if (view.empty()) continue;
        const auto eq = view.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("line " + std::to_string(number) + ": expected 'key = value'");
        try {
            assign(config, trim(view.substr(0, eq)), view.substr(eq + 1));
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(number) + ": " + e.what());
        }
    }
    return config;
}

RunConfig load_config(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    try {
        return parse_config(in, std::move(base));
    } catch (const ConfigError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

void apply_override(RunConfig& config, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos)
        throw ConfigError("override '" + std::string(assignment) + "' is not key=value");
    assign(config, trim(assignment.substr(0, eq)), assignment.substr(eq + 1));
}

std::string dump_config(const RunConfig& config) {
    std::ostringstream out;
    for (const auto& [key, field] : fields()) out << key << " = " << field.get(config) << '\n';
    return out.str();
}

} // namespace ionprobe
