#ifndef TLSM_METRICS_HPP
#define TLSM_METRICS_HPP

#include "tlsm/tensor.hpp"

#include <vector>

namespace tlsm {

/// PSNR in dB for identical inputs (MSE = 0).
inline constexpr double kPsnrCap = 300.0;

/// 10 log10(peak^2 / MSE).  Peak defaults to 1.0 for data normalised to
/// [-1, 1].  Returns kPsnrCap when the inputs are identical.
double psnr(const Tensor3& x, const Tensor3& ref, double peak = 1.0);

/// Mean single-scale SSIM over frontal slices: 11-sample Gaussian window
/// (sigma 1.5), C1 = (0.01 L)^2, C2 = (0.03 L)^2, valid-region windowing.
/// dynamic_range defaults to 2.0 for data in [-1, 1].
double ssim(const Tensor3& x, const Tensor3& ref, double dynamic_range = 2.0);

/// SSIM of a single frontal slice.
double ssim_slice(const Tensor3& x, const Tensor3& ref, std::size_t k,
                  double dynamic_range = 2.0);

struct MetricReport {
    double psnr_db = 0.0;
    double ssim = 0.0;
    std::vector<double> per_slice_psnr;
    std::vector<double> per_slice_ssim;
};

/// Both metrics plus their per-frontal-slice breakdowns.
MetricReport evaluate(const Tensor3& x, const Tensor3& ref, double peak = 1.0,
                      double dynamic_range = 2.0);

} // namespace tlsm

#endif
