#include "tlsm/fft.hpp"

#include <fftw3.h>

#include <cstdint>
#include <map>
#include <mutex>

namespace tlsm {

namespace {

// Cached FFTW plans keyed by geometry.  Plans are created once under a lock
// with FFTW_ESTIMATE | FFTW_UNALIGNED and then executed through the
// new-array interface, which is thread-safe on distinct buffers.  ESTIMATE
// keeps plan selection deterministic across runs.
class PlanCache {
public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    fftw_plan plan_1d(int n, int sign) {
        std::scoped_lock lock(mutex_);
        const Key key{n, 0, sign};
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        std::vector<fftw_complex> in(n), out(n);
        fftw_plan p = fftw_plan_dft_1d(n, in.data(), out.data(), sign,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_.emplace(key, p);
        return p;
    }

    fftw_plan plan_2d(int n1, int n2, int sign) {
        std::scoped_lock lock(mutex_);
        const Key key{n1, n2, sign};
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        std::vector<fftw_complex> in(static_cast<std::size_t>(n1) * n2),
            out(static_cast<std::size_t>(n1) * n2);
        fftw_plan p = fftw_plan_dft_2d(n1, n2, in.data(), out.data(), sign,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_.emplace(key, p);
        return p;
    }

private:
    using Key = std::array<int, 3>;
    std::mutex mutex_;
    std::map<Key, fftw_plan> plans_;
};

fftw_complex* as_fftw(std::complex<double>* p) {
    return reinterpret_cast<fftw_complex*>(p);
}

// One DFT per contiguous tube, parallel over tubes.
SpectralTensor3 transform_mode3(const SpectralTensor3& s, int sign) {
    const auto [n1, n2, n3] = s.dims();
    SpectralTensor3 out(n1, n2, n3);
    fftw_plan plan = PlanCache::instance().plan_1d(static_cast<int>(n3), sign);
    const std::int64_t tubes = static_cast<std::int64_t>(n1 * n2);
#pragma omp parallel for
    for (std::int64_t t = 0; t < tubes; ++t) {
        auto* in = const_cast<std::complex<double>*>(s.data().data()) + t * n3;
        auto* dst = out.data().data() + t * n3;
        fftw_execute_dft(plan, as_fftw(in), as_fftw(dst));
    }
    return out;
}

} // namespace

SpectralTensor3 fft_mode3(const Tensor3& t) {
    const auto [n1, n2, n3] = t.dims();
    SpectralTensor3 tmp(n1, n2, n3);
    for (std::size_t n = 0; n < t.size(); ++n) tmp.data()[n] = t.data()[n];
    return transform_mode3(tmp, FFTW_FORWARD);
}

SpectralTensor3 ifft_mode3_full(const SpectralTensor3& s) {
    SpectralTensor3 out = transform_mode3(s, FFTW_BACKWARD);
    const double scale = 1.0 / static_cast<double>(s.n3());
    for (auto& v : out.data()) v *= scale;
    return out;
}

Tensor3 ifft_mode3(const SpectralTensor3& s) {
    SpectralTensor3 full = ifft_mode3_full(s);
    Tensor3 out(s.n1(), s.n2(), s.n3());
    for (std::size_t n = 0; n < out.size(); ++n) out.data()[n] = full.data()[n].real();
    return out;
}

namespace detail {

void fft2(const std::complex<double>* in, std::complex<double>* out,
          std::size_t n1, std::size_t n2, int sign) {
    fftw_plan plan = PlanCache::instance().plan_2d(
        static_cast<int>(n1), static_cast<int>(n2),
        sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD);
    fftw_execute_dft(plan, as_fftw(const_cast<std::complex<double>*>(in)),
                     as_fftw(out));
}

} // namespace detail

} // namespace tlsm
