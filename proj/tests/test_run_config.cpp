#include "ionprobe/errors.hpp"
#include "ionprobe/run_config.hpp"

#include <doctest.h>

#include <sstream>
#include <string>

using namespace ionprobe;

namespace {

RunConfig parse(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

std::string error_of(const std::string& text) {
    try {
        parse(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("parse keys, comments and lists") {
    const RunConfig c = parse("# header\n"
                              "n_ions = 200\n"
                              "\n"
                              "delta = -1e-5   # zigzag side\n"
                              "eta=0.25\n"
                              "delta_values = 0.1, -0.01, 1e-3\n"
                              "n_values = 8, 16\n"
                              "output = out.csv\n");
    CHECK(c.n_ions == 200);
    CHECK(c.delta == -1e-5);
    CHECK(c.eta == 0.25);
    CHECK(c.delta_values == std::vector<double>{0.1, -0.01, 1e-3});
    CHECK(c.n_values == std::vector<int>{8, 16});
    CHECK(c.output == "out.csv");
    CHECK(c.tau_max == kShortWindow);
    CHECK_NOTHROW(c.validate());
}

TEST_CASE("errors carry line numbers") {
    CHECK(error_of("n_ions = 10\nbogus = 1\n").find("line 2") != std::string::npos);
    CHECK(error_of("n_ions = 10\nbogus = 1\n").find("unknown key 'bogus'") != std::string::npos);
    CHECK(error_of("\n\neta = abc\n").find("line 3") != std::string::npos);
    CHECK(error_of("n_ions 10\n").find("line 1") != std::string::npos);
    CHECK(error_of("n_ions = 10.5\n").find("line 1") != std::string::npos);
    CHECK(error_of("delta_values = 0.1,,0.2\n").find("line 1") != std::string::npos);
}

TEST_CASE("validation ranges") {
    RunConfig c;
    CHECK_NOTHROW(c.validate());
    c.delta = 0.0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = {};
    c.delta_values = {0.2};
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = {};
    c.n_values = {20, 7};
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = {};
    c.dtau = 0.2;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = {};
    c.tau_max = 10.03;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = {};
    c.pair_theta = 4.0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("overrides") {
    RunConfig c;
    apply_override(c, "n_ions=50");
    apply_override(c, " delta = -0.01 ");
    CHECK(c.n_ions == 50);
    CHECK(c.delta == -0.01);
    CHECK_THROWS_AS(apply_override(c, "n_ions"), ConfigError);
    CHECK_THROWS_AS(apply_override(c, "nope=1"), ConfigError);
}

TEST_CASE("dump round-trips") {
    RunConfig c;
    c.n_ions = 64;
    c.delta_values = {-1e-3, 2e-2};
    c.eta = 0.3;
    const RunConfig back = parse(dump_config(c));
    CHECK(back.n_ions == 64);
    CHECK(back.delta_values == c.delta_values);
    CHECK(back.eta == 0.3);
    CHECK(back.uses_sigma_x_pair());
    CHECK(dump_config(back) == dump_config(c));
}

TEST_CASE("default delta grid") {
    RunConfig c;
    const auto d = c.sweep_deltas();
    CHECK(d.size() == 2 * 43);
    CHECK(d.front() == -0.1);
    CHECK(d.back() == 0.1);
    CHECK(std::is_sorted(d.begin(), d.end()));
    int per_decade = 0;
    for (double x : d)
        if (x > 1e-3 && x <= 1e-2) ++per_decade;
    CHECK(per_decade == 7);
}
