#include "tlsm/solver.hpp"

#include "tlsm/fft.hpp"
#include "tlsm/lsm.hpp"
#include "tlsm/metrics.hpp"
#include "tlsm/tsvd.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tlsm {

std::string to_string(SolverMode m) {
    switch (m) {
    case SolverMode::Tlsm: return "TLSM";
    case SolverMode::TlsmTnn: return "TLSM-TNN";
    case SolverMode::TlsmUtv: return "TLSM-UTV";
    }
    return "TLSM";
}

SolverMode parse_mode(std::string_view s) {
    if (s == "TLSM") return SolverMode::Tlsm;
    if (s == "TLSM-TNN") return SolverMode::TlsmTnn;
    if (s == "TLSM-UTV") return SolverMode::TlsmUtv;
    throw std::invalid_argument("unknown solver mode: " + std::string(s));
}

void SolverConfig::validate() const {
    if (!(a > 0) || !(b > 0) || !(c > 0) || !(tau > 0) || !(lambda1 > 0) || !(lambda2 > 0))
        throw std::invalid_argument("solver balancing and penalty weights must be positive");
    if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
    if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
    if (rel_tol < 0) throw std::invalid_argument("rel_tol must be nonnegative");
}

namespace {

void check_dims(const SolverState& state, const Tensor3& y) {
    for (const Tensor3* t : {&state.x, &state.z, &state.d1, &state.d2,
                             &state.bb, &state.b1, &state.b2})
        if (!t->same_dims(y))
            throw std::invalid_argument("solver state dimensions do not match observation");
}

// Eigenvalues of grad'grad for the length-n circular difference at frequency
// p: |exp(2 pi i p / n) - 1|^2 = 4 sin^2(pi p / n).
double laplacian_eig(std::size_t p, std::size_t n) {
    const double s = std::sin(std::numbers::pi * static_cast<double>(p) / static_cast<double>(n));
    return 4.0 * s * s;
}

// Shrink a vector per the configured mode: scale-mixture alternation, or a
// plain soft-threshold at penalty/quad.
void shrink_vector(std::vector<double>& values, const LsmParams& prm, bool use_lsm) {
    if (use_lsm) {
        const LsmPair pair = lsm_shrink(values, prm, 1);
        for (std::size_t i = 0; i < values.size(); ++i)
            values[i] = pair.theta[i] * pair.alpha[i];
    } else {
        const double thr = prm.penalty_weight / prm.quad_weight;
#pragma omp parallel for if (values.size() > 4096)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(values.size()); ++i)
            values[i] = soft_threshold(values[i], thr);
    }
}

} // namespace

Tensor3 update_x(const SolverState& state, const Tensor3& y, const SolverConfig& cfg) {
    check_dims(state, y);
    const auto [n1, n2, n3] = y.dims();

    Tensor3 rhs = cfg.a * (state.z - state.bb) + y;
    rhs += cfg.b * diff_adjoint(state.d2 - state.b2, 2);
    rhs += cfg.c * diff_adjoint(state.d1 + diff_circular(y, 1) - state.b1, 1);

    // Denominator of the frequency-domain division, shared by all slices.
    std::vector<double> denom(n1 * n2);
    for (std::size_t p = 0; p < n1; ++p)
        for (std::size_t q = 0; q < n2; ++q)
            denom[p * n2 + q] = 1.0 + cfg.a + cfg.b * laplacian_eig(q, n2) +
                                cfg.c * laplacian_eig(p, n1);

    Tensor3 x(n1, n2, n3);
    const double scale = 1.0 / static_cast<double>(n1 * n2);
#pragma omp parallel
    {
        std::vector<std::complex<double>> buf(n1 * n2), spec(n1 * n2);
#pragma omp for
        for (std::int64_t k = 0; k < static_cast<std::int64_t>(n3); ++k) {
            const std::size_t kk = static_cast<std::size_t>(k);
            for (std::size_t i = 0; i < n1; ++i)
                for (std::size_t j = 0; j < n2; ++j)
                    buf[i * n2 + j] = rhs(i, j, kk);
            detail::fft2(buf.data(), spec.data(), n1, n2, -1);
            for (std::size_t n = 0; n < spec.size(); ++n) spec[n] /= denom[n];
            detail::fft2(spec.data(), buf.data(), n1, n2, +1);
            for (std::size_t i = 0; i < n1; ++i)
                for (std::size_t j = 0; j < n2; ++j)
                    x(i, j, kk) = buf[i * n2 + j].real() * scale;
        }
    }
    return x;
}

Tensor3 update_z(const SolverState& state, const SolverConfig& cfg) {
    const Tensor3 l = state.x + state.bb;
    const TSvdFactors factors = t_svd(l);
    const std::size_t n3 = l.n3();
    const std::size_t m = std::min(l.n1(), l.n2());

    // Flatten the per-frequency singular values, shrink, fold back.
    std::vector<double> sv(n3 * m);
    for (std::size_t k = 0; k < n3; ++k)
        for (std::size_t i = 0; i < m; ++i)
            sv[k * m + i] = factors.spectral_singulars[k][i];

    const bool use_lsm = cfg.mode != SolverMode::TlsmUtv;
    shrink_vector(sv, LsmParams{cfg.tau, cfg.a, cfg.epsilon}, use_lsm);

    std::vector<std::vector<double>> shrunk(n3, std::vector<double>(m));
    for (std::size_t k = 0; k < n3; ++k)
        for (std::size_t i = 0; i < m; ++i)
            shrunk[k][i] = std::max(sv[k * m + i], 0.0);
    return t_reconstruct(factors, shrunk);
}

Tensor3 update_d1(const SolverState& state, const Tensor3& y, const SolverConfig& cfg) {
    Tensor3 k1 = diff_circular(state.x - y, 1) + state.b1;
    const bool use_lsm = cfg.mode != SolverMode::TlsmTnn;
    shrink_vector(k1.data(), LsmParams{cfg.lambda2, cfg.c, cfg.epsilon}, use_lsm);
    return k1;
}

Tensor3 update_d2(const SolverState& state, const SolverConfig& cfg) {
    Tensor3 h2 = diff_circular(state.x, 2) + state.b2;
    const bool use_lsm = cfg.mode != SolverMode::TlsmTnn;
    shrink_vector(h2.data(), LsmParams{cfg.lambda1, cfg.b, cfg.epsilon}, use_lsm);
    return h2;
}

void update_multipliers(SolverState& state, const Tensor3& y) {
    state.bb -= state.z - state.x;
    state.b1 -= state.d1 - diff_circular(state.x - y, 1);
    state.b2 -= state.d2 - diff_circular(state.x, 2);
}

DenoiseResult denoise(const Tensor3& y, const SolverConfig& cfg, const Tensor3* reference) {
    cfg.validate();
    if (!all_finite(y))
        throw std::invalid_argument("denoise: observation contains non-finite entries");
    if (reference && !reference->same_dims(y))
        throw std::invalid_argument("denoise: reference dimensions do not match observation");

    const auto [n1, n2, n3] = y.dims();
    SolverState state;
    state.x = Tensor3(n1, n2, n3);
    state.z = y; // initial estimate
    state.d1 = Tensor3(n1, n2, n3);
    state.d2 = Tensor3(n1, n2, n3);
    state.bb = Tensor3(n1, n2, n3);
    state.b1 = Tensor3(n1, n2, n3);
    state.b2 = Tensor3(n1, n2, n3);

    Tensor3 x_prev;
    for (int t = 1; t <= cfg.max_iters; ++t) {
        x_prev = state.x;
        state.x = update_x(state, y, cfg);
        state.z = update_z(state, cfg);
        state.d1 = update_d1(state, y, cfg);
        state.d2 = update_d2(state, cfg);

        const Tensor3 rz = state.z - state.x;
        const Tensor3 r1 = state.d1 - diff_circular(state.x - y, 1);
        const Tensor3 r2 = state.d2 - diff_circular(state.x, 2);
        state.bb -= rz;
        state.b1 -= r1;
        state.b2 -= r2;

        if (!all_finite(state.x) || !all_finite(state.z))
            throw std::runtime_error("denoise: non-finite intermediate at iteration " +
                                     std::to_string(t));

        IterationRecord rec;
        rec.iter = t;
        rec.res_z = frobenius_norm(rz);
        rec.res_d1 = frobenius_norm(r1);
        rec.res_d2 = frobenius_norm(r2);
        if (reference) {
            rec.psnr_db = psnr(state.x, *reference);
            rec.ssim = ssim(state.x, *reference);
        }
        state.history.push_back(rec);
        state.iter = t;

        if (cfg.rel_tol > 0.0 && t >= 2) {
            const double base = frobenius_norm(x_prev);
            if (base > 0.0 && frobenius_norm(state.x - x_prev) / base < cfg.rel_tol)
                break;
        }
    }
    return DenoiseResult{std::move(state.x), std::move(state.history)};
}

} // namespace tlsm
