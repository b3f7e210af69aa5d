#ifndef TLSM_COMMANDS_HPP
#define TLSM_COMMANDS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace tlsm {

// Stable exit codes, shared by the CLI and the in-process command helpers.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2; // unparseable or invalid configuration
inline constexpr int kExitIo = 3;     // file read/write failure
inline constexpr int kExitDims = 4;   // tensor dimension mismatch

struct GenerateOptions {
    std::filesystem::path config;
    std::filesystem::path out_clean;
    std::filesystem::path out_noisy;
    std::filesystem::path out_footprint;
    std::optional<std::uint64_t> seed; // overrides noise.seed
};

struct DenoiseOptions {
    std::filesystem::path config;
    std::filesystem::path input;
    std::filesystem::path output;
    std::optional<std::filesystem::path> reference;
    std::optional<std::filesystem::path> history_csv;
    std::optional<std::string> mode; // overrides solver.mode
    std::optional<int> iters;        // overrides solver.max_iters
};

struct BenchmarkOptions {
    std::filesystem::path config;
    std::filesystem::path out_csv;
    std::vector<std::string> modes = {"TLSM", "TLSM-TNN", "TLSM-UTV"};
    std::vector<double> footprints = {0.1, 0.2, 0.5};
    std::vector<double> sigmas = {0.01, 0.02, 0.03, 0.04};
};

struct MetricsOptions {
    std::filesystem::path input;
    std::filesystem::path reference;
    double peak = 1.0;
};

int cmd_generate(const GenerateOptions& opt);
int cmd_denoise(const DenoiseOptions& opt);
int cmd_benchmark(const BenchmarkOptions& opt);
int cmd_metrics(const MetricsOptions& opt);

} // namespace tlsm

#endif
