#ifndef TLSM_CONFIG_HPP
#define TLSM_CONFIG_HPP

#include "tlsm/seisgen.hpp"
#include "tlsm/solver.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>

namespace tlsm {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Synthetic data geometry: dims are (inline, crossline, time).
struct DataSpec {
    std::size_t n1 = 40;
    std::size_t n2 = 64;
    std::size_t n3 = 128;
    double dt = 0.002;       // s
    double peak_freq = 10.0; // Hz
    std::vector<EventSpec> events = default_events();

    bool operator==(const DataSpec&) const = default;
};

/// Plain-text run configuration: `key = value` lines, '#' comments, unknown
/// keys rejected.  `data.event = intercept,dip_inline,dip_crossline,amplitude`
/// may repeat; the first occurrence replaces the default event list.
struct RunConfig {
    SolverConfig solver;
    NoiseSpec noise;
    DataSpec data;

    bool operator==(const RunConfig&) const = default;
};

RunConfig parse_run_config(const std::string& text);
RunConfig load_run_config(const std::filesystem::path& path);

/// Inverse of parse_run_config: parse(render(c)) == c exactly (doubles are
/// rendered with shortest round-trip formatting).
std::string render_run_config(const RunConfig& cfg);

} // namespace tlsm

#endif
