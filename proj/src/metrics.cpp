#include "tlsm/metrics.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace tlsm {

namespace {

constexpr std::size_t kWindow = 11;
constexpr double kWindowSigma = 1.5;

std::array<double, kWindow> gaussian_window() {
    std::array<double, kWindow> w{};
    const double half = (kWindow - 1) / 2.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < kWindow; ++i) {
        const double d = static_cast<double>(i) - half;
        w[i] = std::exp(-d * d / (2.0 * kWindowSigma * kWindowSigma));
        sum += w[i];
    }
    for (double& v : w) v /= sum;
    return w;
}

double mse(const Tensor3& x, const Tensor3& ref) {
    double acc = 0.0;
    for (std::size_t n = 0; n < x.size(); ++n) {
        const double d = x.data()[n] - ref.data()[n];
        acc += d * d;
    }
    return acc / static_cast<double>(x.size());
}

void check_dims(const Tensor3& x, const Tensor3& ref) {
    if (!x.same_dims(ref))
        throw std::invalid_argument("metrics: dimension mismatch");
}

// Separable valid-mode Gaussian filtering of the five moment fields of one
// slice pair, accumulating the SSIM map mean.
double ssim_slice_impl(const Tensor3& x, const Tensor3& ref, std::size_t k, double range) {
    const std::size_t n1 = x.n1(), n2 = x.n2();
    if (n1 < kWindow || n2 < kWindow)
        throw std::invalid_argument("ssim: slice smaller than the 11-sample window");
    static const std::array<double, kWindow> w = gaussian_window();

    const double c1 = (0.01 * range) * (0.01 * range);
    const double c2 = (0.03 * range) * (0.03 * range);

    // Row pass: filter along j, keeping all i rows.
    const std::size_t m2 = n2 - kWindow + 1;
    const std::size_t m1 = n1 - kWindow + 1;
    std::vector<double> rx(n1 * m2), ry(n1 * m2), rxx(n1 * m2), ryy(n1 * m2), rxy(n1 * m2);
    for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t j = 0; j < m2; ++j) {
            double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
            for (std::size_t t = 0; t < kWindow; ++t) {
                const double a = x(i, j + t, k);
                const double b = ref(i, j + t, k);
                sx += w[t] * a;
                sy += w[t] * b;
                sxx += w[t] * a * a;
                syy += w[t] * b * b;
                sxy += w[t] * a * b;
            }
            const std::size_t idx = i * m2 + j;
            rx[idx] = sx; ry[idx] = sy; rxx[idx] = sxx; ryy[idx] = syy; rxy[idx] = sxy;
        }
    }

    // Column pass and SSIM accumulation.
    double acc = 0.0;
    for (std::size_t i = 0; i < m1; ++i) {
        for (std::size_t j = 0; j < m2; ++j) {
            double mx = 0, my = 0, mxx = 0, myy = 0, mxy = 0;
            for (std::size_t t = 0; t < kWindow; ++t) {
                const std::size_t idx = (i + t) * m2 + j;
                mx += w[t] * rx[idx];
                my += w[t] * ry[idx];
                mxx += w[t] * rxx[idx];
                myy += w[t] * ryy[idx];
                mxy += w[t] * rxy[idx];
            }
            const double vx = mxx - mx * mx;
            const double vy = myy - my * my;
            const double cov = mxy - mx * my;
            const double num = (2.0 * mx * my + c1) * (2.0 * cov + c2);
            const double den = (mx * mx + my * my + c1) * (vx + vy + c2);
            acc += num / den;
        }
    }
    return acc / static_cast<double>(m1 * m2);
}

} // namespace

double psnr(const Tensor3& x, const Tensor3& ref, double peak) {
    check_dims(x, ref);
    if (!(peak > 0.0)) throw std::invalid_argument("psnr: peak must be positive");
    const double e = mse(x, ref);
    if (e == 0.0) return kPsnrCap;
    return 10.0 * std::log10(peak * peak / e);
}

double ssim_slice(const Tensor3& x, const Tensor3& ref, std::size_t k, double range) {
    check_dims(x, ref);
    return ssim_slice_impl(x, ref, k, range);
}

double ssim(const Tensor3& x, const Tensor3& ref, double range) {
    check_dims(x, ref);
    if (x.n1() < kWindow || x.n2() < kWindow)
        throw std::invalid_argument("ssim: slice smaller than the 11-sample window");
    const std::size_t n3 = x.n3();
    std::vector<double> per_slice(n3);
#pragma omp parallel for
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(n3); ++k)
        per_slice[k] = ssim_slice_impl(x, ref, static_cast<std::size_t>(k), range);
    double acc = 0.0;
    for (double v : per_slice) acc += v;
    return acc / static_cast<double>(n3);
}

MetricReport evaluate(const Tensor3& x, const Tensor3& ref, double peak, double range) {
    check_dims(x, ref);
    if (x.n1() < kWindow || x.n2() < kWindow)
        throw std::invalid_argument("ssim: slice smaller than the 11-sample window");
    MetricReport rep;
    rep.psnr_db = psnr(x, ref, peak);
    const std::size_t n3 = x.n3();
    rep.per_slice_psnr.resize(n3);
    rep.per_slice_ssim.resize(n3);
    for (std::size_t k = 0; k < n3; ++k) {
        double acc = 0.0;
        for (std::size_t i = 0; i < x.n1(); ++i)
            for (std::size_t j = 0; j < x.n2(); ++j) {
                const double d = x(i, j, k) - ref(i, j, k);
                acc += d * d;
            }
        const double e = acc / static_cast<double>(x.n1() * x.n2());
        rep.per_slice_psnr[k] = e == 0.0 ? kPsnrCap : 10.0 * std::log10(peak * peak / e);
        rep.per_slice_ssim[k] = ssim_slice_impl(x, ref, k, range);
    }
    double acc = 0.0;
    for (double v : rep.per_slice_ssim) acc += v;
    rep.ssim = acc / static_cast<double>(n3);
    return rep;
}

} // namespace tlsm
