// Command-line front end: generate synthetic volumes, denoise tensor files,
// sweep noise grids, and compare tensors.  OMP_NUM_THREADS controls the
// parallelism degree of every subcommand.

#include "tlsm/commands.hpp"

#include <CLI11.hpp>

int main(int argc, char** argv) {
    CLI::App app{"Seismic tensor denoising via triply Laplacian scale mixtures"};
    app.require_subcommand(1);

    tlsm::GenerateOptions gen;
    auto* generate = app.add_subcommand("generate", "Write clean/noisy/footprint tensors");
    generate->add_option("--config", gen.config, "Run configuration file")->required();
    generate->add_option("--out-clean", gen.out_clean, "Clean tensor output")->required();
    generate->add_option("--out-noisy", gen.out_noisy, "Noisy tensor output")->required();
    generate->add_option("--out-footprint", gen.out_footprint, "Footprint tensor output")
        ->required();
    std::uint64_t seed_override = 0;
    auto* seed_opt = generate->add_option("--seed", seed_override, "Override noise.seed");

    tlsm::DenoiseOptions den;
    auto* denoise = app.add_subcommand("denoise", "Run the solver on a tensor file");
    denoise->add_option("--config", den.config, "Run configuration file")->required();
    denoise->add_option("--in", den.input, "Noisy tensor input")->required();
    denoise->add_option("--out", den.output, "Denoised tensor output")->required();
    std::string ref_path, hist_path, mode_override;
    int iters_override = 0;
    auto* ref_opt = denoise->add_option("--ref", ref_path, "Clean reference tensor");
    auto* hist_opt = denoise->add_option("--history", hist_path, "Per-iteration CSV output");
    auto* mode_opt =
        denoise->add_option("--mode", mode_override, "TLSM, TLSM-TNN or TLSM-UTV");
    auto* iters_opt = denoise->add_option("--iters", iters_override, "Override max iterations");

    tlsm::BenchmarkOptions ben;
    auto* benchmark = app.add_subcommand("benchmark", "Sweep a noise grid and record metrics");
    benchmark->add_option("--config", ben.config, "Run configuration file")->required();
    benchmark->add_option("--out", ben.out_csv, "Results CSV output")->required();
    benchmark->add_option("--modes", ben.modes, "Solver modes to run")->delimiter(',');
    benchmark->add_option("--F", ben.footprints, "Footprint amplitudes")->delimiter(',');
    benchmark->add_option("--sigma", ben.sigmas, "Gaussian sigmas")->delimiter(',');

    tlsm::MetricsOptions met;
    auto* metrics = app.add_subcommand("metrics", "PSNR/SSIM between two tensor files");
    metrics->add_option("--in", met.input, "Tensor under test")->required();
    metrics->add_option("--ref", met.reference, "Reference tensor")->required();
    metrics->add_option("--peak", met.peak, "PSNR peak value");

    CLI11_PARSE(app, argc, argv);

    if (generate->parsed()) {
        if (!seed_opt->empty()) gen.seed = seed_override;
        return tlsm::cmd_generate(gen);
    }
    if (denoise->parsed()) {
        if (!ref_opt->empty()) den.reference = ref_path;
        if (!hist_opt->empty()) den.history_csv = hist_path;
        if (!mode_opt->empty()) den.mode = mode_override;
        if (!iters_opt->empty()) den.iters = iters_override;
        return tlsm::cmd_denoise(den);
    }
    if (benchmark->parsed()) return tlsm::cmd_benchmark(ben);
    if (metrics->parsed()) return tlsm::cmd_metrics(met);
    return 1;
}
