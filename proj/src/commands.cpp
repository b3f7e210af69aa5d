#include "tlsm/commands.hpp"

#include "tlsm/config.hpp"
#include "tlsm/io.hpp"
#include "tlsm/metrics.hpp"
#include "tlsm/seisgen.hpp"
#include "tlsm/solver.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace tlsm {

namespace {

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Tensor3 generate_from(const RunConfig& cfg) {
    return generate_clean({cfg.data.n1, cfg.data.n2, cfg.data.n3}, cfg.data.events,
                          cfg.data.dt, cfg.data.peak_freq);
}

std::string fmt_num(double v) {
    std::ostringstream out;
    out << std::setprecision(12) << v;
    return out.str();
}

} // namespace

int cmd_generate(const GenerateOptions& opt) {
    RunConfig cfg;
    try {
        cfg = load_run_config(opt.config);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    }
    if (opt.seed) cfg.noise.seed = *opt.seed;

    try {
        const Tensor3 clean = generate_from(cfg);
        const NoisyData noisy = add_noise(clean, cfg.noise);
        write_tensor(opt.out_clean, clean);
        write_tensor(opt.out_noisy, noisy.y);
        write_tensor(opt.out_footprint, noisy.f);
        std::printf("[tlsm] generate dims=%zux%zux%zu events=%zu F=%s sigma=%s seed=%llu\n",
                    cfg.data.n1, cfg.data.n2, cfg.data.n3, cfg.data.events.size(),
                    fmt_num(cfg.noise.footprint_amplitude).c_str(),
                    fmt_num(cfg.noise.gaussian_sigma).c_str(),
                    static_cast<unsigned long long>(cfg.noise.seed));
    } catch (const IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    }
    return kExitOk;
}

int cmd_denoise(const DenoiseOptions& opt) {
    RunConfig cfg;
    try {
        cfg = load_run_config(opt.config);
        if (opt.mode) cfg.solver.mode = parse_mode(*opt.mode);
        if (opt.iters) cfg.solver.max_iters = *opt.iters;
        cfg.solver.validate();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    }

    Tensor3 y, ref;
    bool has_ref = false;
    try {
        y = read_tensor(opt.input);
        if (opt.reference) {
            ref = read_tensor(*opt.reference);
            has_ref = true;
        }
    } catch (const IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    }
    if (has_ref && !ref.same_dims(y)) {
        std::fprintf(stderr, "error: noisy and reference dimensions differ\n");
        return kExitDims;
    }

    try {
        const auto start = std::chrono::steady_clock::now();
        const DenoiseResult result = denoise(y, cfg.solver, has_ref ? &ref : nullptr);
        const double seconds = elapsed_seconds(start);

        write_tensor(opt.output, result.x);
        if (opt.history_csv) {
            write_history_csv(*opt.history_csv,
                              {{"mode", to_string(cfg.solver.mode)},
                               {"iters", std::to_string(cfg.solver.max_iters)},
                               {"input", opt.input.string()}},
                              result.history);
        }
        if (has_ref) {
            std::printf("[tlsm] denoise mode=%s iters=%d psnr_db=%s ssim=%s seconds=%s\n",
                        to_string(cfg.solver.mode).c_str(),
                        static_cast<int>(result.history.size()),
                        fmt_num(psnr(result.x, ref)).c_str(),
                        fmt_num(ssim(result.x, ref)).c_str(), fmt_num(seconds).c_str());
        } else {
            std::printf("[tlsm] denoise mode=%s iters=%d seconds=%s\n",
                        to_string(cfg.solver.mode).c_str(),
                        static_cast<int>(result.history.size()), fmt_num(seconds).c_str());
        }
    } catch (const IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    }
    return kExitOk;
}

int cmd_benchmark(const BenchmarkOptions& opt) {
    RunConfig cfg;
    std::vector<SolverMode> modes;
    try {
        cfg = load_run_config(opt.config);
        for (const std::string& m : opt.modes) modes.push_back(parse_mode(m));
        if (modes.empty()) throw ConfigError("benchmark: no modes requested");
        if (opt.footprints.empty() || opt.sigmas.empty())
            throw ConfigError("benchmark: empty noise grid");
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    }

    try {
        const Tensor3 clean = generate_from(cfg);

        // Shared noisy instances, one per grid point.
        std::vector<Tensor3> noisy;
        noisy.reserve(opt.footprints.size() * opt.sigmas.size());
        for (double f : opt.footprints)
            for (double s : opt.sigmas) {
                NoiseSpec spec = cfg.noise;
                spec.footprint_amplitude = f;
                spec.gaussian_sigma = s;
                noisy.push_back(add_noise(clean, spec).y);
            }

        std::ostringstream csv;
        csv << "# dims = " << cfg.data.n1 << "x" << cfg.data.n2 << "x" << cfg.data.n3 << "\n";
        csv << "# seed = " << cfg.noise.seed << "\n";
        csv << "# iters = " << cfg.solver.max_iters << "\n";
        csv << "mode,F,sigma,psnr_db,ssim,seconds\n";
        csv << std::setprecision(12);
        for (SolverMode mode : modes) {
            SolverConfig sc = cfg.solver;
            sc.mode = mode;
            std::size_t point = 0;
            for (double f : opt.footprints)
                for (double s : opt.sigmas) {
                    const auto start = std::chrono::steady_clock::now();
                    const DenoiseResult result = denoise(noisy[point], sc);
                    const double seconds = elapsed_seconds(start);
                    const double p = psnr(result.x, clean);
                    const double ss = ssim(result.x, clean);
                    csv << to_string(mode) << ',' << f << ',' << s << ',' << p << ',' << ss
                        << ',' << seconds << "\n";
                    std::printf("[tlsm] benchmark mode=%s F=%s sigma=%s psnr_db=%s ssim=%s seconds=%s\n",
                                to_string(mode).c_str(), fmt_num(f).c_str(), fmt_num(s).c_str(),
                                fmt_num(p).c_str(), fmt_num(ss).c_str(), fmt_num(seconds).c_str());
                    ++point;
                }
        }

        std::ofstream out(opt.out_csv, std::ios::trunc);
        if (!out) throw IoError("cannot open for writing: " + opt.out_csv.string());
        out << csv.str();
        if (!out) throw IoError("write failed: " + opt.out_csv.string());
    } catch (const IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    }
    return kExitOk;
}

int cmd_metrics(const MetricsOptions& opt) {
    Tensor3 x, ref;
    try {
        x = read_tensor(opt.input);
        ref = read_tensor(opt.reference);
    } catch (const IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    }
    if (!x.same_dims(ref)) {
        std::fprintf(stderr, "error: tensor dimensions differ\n");
        return kExitDims;
    }
    std::printf("[tlsm] metrics psnr_db=%s ssim=%s\n",
                fmt_num(psnr(x, ref, opt.peak)).c_str(), fmt_num(ssim(x, ref)).c_str());
    return kExitOk;
}

} // namespace tlsm
