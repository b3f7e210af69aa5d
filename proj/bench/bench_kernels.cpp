// Kernel benchmark: times the OpenMP-parallel kernels against the serial
// reference implementations and reports agreement, then measures thread
// scaling of a full solver iteration.
//
//   bench_kernels [--reps N] [--n1 N] [--n2 N] [--n3 N]

#include "tlsm/fft.hpp"
#include "tlsm/lsm.hpp"
#include "tlsm/seisgen.hpp"
#include "tlsm/solver.hpp"
#include "tlsm/tensor.hpp"
#include "tlsm/tsvd.hpp"

#include "support/reference.hpp"
#include "support/testutil.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>
#include <string>

using namespace tlsm;
using testutil::random_tensor;

namespace {

double seconds(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <typename F> double time_best(int reps, F&& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        best = std::min(best, seconds(t0));
    }
    return best;
}

void report(const char* name, double kernel_s, double reference_s, double max_err) {
    std::printf("%-28s %10.4f ms %14.4f ms %9.1fx   %.3e\n", name, kernel_s * 1e3,
                reference_s * 1e3, reference_s / kernel_s, max_err);
}

} // namespace

int main(int argc, char** argv) {
    int reps = 3;
    std::size_t n1 = 32, n2 = 32, n3 = 64;
    for (int i = 1; i + 1 < argc; i += 2) {
        if (!std::strcmp(argv[i], "--reps")) reps = std::atoi(argv[i + 1]);
        if (!std::strcmp(argv[i], "--n1")) n1 = std::strtoul(argv[i + 1], nullptr, 10);
        if (!std::strcmp(argv[i], "--n2")) n2 = std::strtoul(argv[i + 1], nullptr, 10);
        if (!std::strcmp(argv[i], "--n3")) n3 = std::strtoul(argv[i + 1], nullptr, 10);
    }

    std::printf("kernels on %zux%zux%zu, %d reps, %d threads\n", n1, n2, n3, reps,
                omp_get_max_threads());
    std::printf("%-28s %13s %17s %10s   %s\n", "kernel", "parallel", "serial ref", "speedup",
                "max |err|");

    std::mt19937_64 rng(7);
    const Tensor3 t = random_tensor(n1, n2, n3, rng);

    {
        SpectralTensor3 fast;
        const double tk = time_best(reps, [&] { fast = fft_mode3(t); });
        SpectralTensor3 slow;
        const double tr = time_best(1, [&] { slow = reference::naive_dft_mode3(t); });
        double err = 0.0;
        for (std::size_t i = 0; i < fast.size(); ++i)
            err = std::max(err, std::abs(fast.data()[i] - slow.data()[i]));
        report("fft_mode3 vs naive DFT", tk, tr, err);
    }

    {
        const Tensor3 d = diff_circular(t, 1);
        const double tk = time_best(reps, [&] { (void)diff_circular(t, 1); });
        Tensor3 slow;
        const double tr = time_best(1, [&] { slow = reference::circulant_diff(t, 1); });
        report("diff_circular vs circulant", tk, tr, max_abs(d - slow));
    }

    {
        const Tensor3 a = random_tensor(n1, 12, 8, rng);
        const Tensor3 b = random_tensor(12, n2, 8, rng);
        Tensor3 fast;
        const double tk = time_best(reps, [&] { fast = t_product(a, b); });
        Tensor3 slow;
        const double tr = time_best(1, [&] { slow = reference::bcirc_t_product(a, b); });
        report("t_product vs block-circulant", tk, tr, max_abs(fast - slow));
    }

    {
        const Tensor3 l = random_tensor(16, 16, 8, rng);
        TSvdFactors f;
        const double tk = time_best(reps, [&] { f = t_svd(l); });
        std::vector<std::vector<double>> oracle;
        const double tr = time_best(1, [&] { oracle = reference::slice_singular_values(l); });
        double err = 0.0;
        for (std::size_t k = 0; k < 8; ++k)
            for (std::size_t i = 0; i < 16; ++i)
                err = std::max(err, std::abs(f.spectral_singulars[k][i] - oracle[k][i]));
        report("t_svd vs per-slice SVD", tk, tr, err);
    }

    {
        std::mt19937_64 rng2(11);
        SolverState st;
        st.x = random_tensor(16, 16, 4, rng2);
        st.z = random_tensor(16, 16, 4, rng2);
        st.d1 = random_tensor(16, 16, 4, rng2);
        st.d2 = random_tensor(16, 16, 4, rng2);
        st.bb = random_tensor(16, 16, 4, rng2);
        st.b1 = random_tensor(16, 16, 4, rng2);
        st.b2 = random_tensor(16, 16, 4, rng2);
        const Tensor3 y = random_tensor(16, 16, 4, rng2);
        const SolverConfig cfg;
        Tensor3 fast;
        const double tk = time_best(reps, [&] { fast = update_x(st, y, cfg); });
        Tensor3 slow;
        const double tr = time_best(1, [&] { slow = reference::dense_update_x(st, y, cfg); });
        report("update_x vs dense solve", tk, tr, max_abs(fast - slow));
    }

    {
        std::vector<double> g(t.data());
        const LsmParams p{0.5, 4.0, 1e-6};
        LsmPair pair;
        const double tk = time_best(reps, [&] { pair = lsm_shrink(g, p, 1); });
        // serial scalar loop
        std::vector<double> serial_s(g.size());
        const double tr = time_best(1, [&] {
            for (std::size_t i = 0; i < g.size(); ++i) {
                const double th = solve_theta(g[i], g[i], p);
                const double al =
                    th > p.epsilon
                        ? soft_threshold(g[i] / th, std::sqrt(2.0) * p.penalty_weight / p.quad_weight)
                        : 0.0;
                serial_s[i] = th * al;
            }
        });
        double err = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i)
            err = std::max(err, std::abs(pair.theta[i] * pair.alpha[i] - serial_s[i]));
        report("lsm_shrink vs scalar loop", tk, tr, err);
    }

    // Thread scaling of one full solver pass.
    {
        const Tensor3 clean = generate_clean({n1, n2, n3}, default_events(), 0.002, 10.0);
        NoiseSpec noise;
        noise.footprint_decay = static_cast<double>(n3) / 4.0;
        const NoisyData data = add_noise(clean, noise);
        SolverConfig cfg;
        cfg.max_iters = 2;

        const int max_threads = omp_get_max_threads();
        omp_set_num_threads(1);
        denoise(data.y, cfg); // warm up plans
        const double t1 = time_best(reps, [&] { denoise(data.y, cfg); });
        omp_set_num_threads(max_threads);
        const double tn = time_best(reps, [&] { denoise(data.y, cfg); });
        std::printf("\ndenoise (%d iters): 1 thread %.1f ms, %d threads %.1f ms, speedup %.2fx\n",
                    cfg.max_iters, t1 * 1e3, max_threads, tn * 1e3, t1 / tn);
    }
    return 0;
}
