#include "tlsm/tensor.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace tlsm {

namespace {

void check_mode(int mode) {
    if (mode != 1 && mode != 2)
        throw std::invalid_argument("diff mode must be 1 or 2");
}

void check_same_dims(const Tensor3& a, const Tensor3& b) {
    if (!a.same_dims(b))
        throw std::invalid_argument("tensor dimension mismatch");
}

} // namespace

double frobenius_norm(const Tensor3& t) {
    double acc = 0.0;
    for (double v : t.data()) acc += v * v;
    return std::sqrt(acc);
}

double max_abs(const Tensor3& t) {
    double m = 0.0;
    for (double v : t.data()) m = std::max(m, std::abs(v));
    return m;
}

bool all_finite(const Tensor3& t) {
    for (double v : t.data())
        if (!std::isfinite(v)) return false;
    return true;
}

Tensor3 diff_circular(const Tensor3& t, int mode) {
    check_mode(mode);
    const auto [n1, n2, n3] = t.dims();
    Tensor3 out(n1, n2, n3);
    const std::int64_t total = static_cast<std::int64_t>(n1 * n2);
#pragma omp parallel for if (total * static_cast<std::int64_t>(n3) > 4096)
    for (std::int64_t ij = 0; ij < total; ++ij) {
        const std::size_t i = static_cast<std::size_t>(ij) / n2;
        const std::size_t j = static_cast<std::size_t>(ij) % n2;
        const std::size_t in = (mode == 1) ? (i + 1) % n1 : i;
        const std::size_t jn = (mode == 2) ? (j + 1) % n2 : j;
        for (std::size_t k = 0; k < n3; ++k)
            out(i, j, k) = t(in, jn, k) - t(i, j, k);
    }
    return out;
}

Tensor3 diff_adjoint(const Tensor3& t, int mode) {
    check_mode(mode);
    const auto [n1, n2, n3] = t.dims();
    Tensor3 out(n1, n2, n3);
    const std::int64_t total = static_cast<std::int64_t>(n1 * n2);
#pragma omp parallel for if (total * static_cast<std::int64_t>(n3) > 4096)
    for (std::int64_t ij = 0; ij < total; ++ij) {
        const std::size_t i = static_cast<std::size_t>(ij) / n2;
        const std::size_t j = static_cast<std::size_t>(ij) % n2;
        // transpose of the circulant difference: out[i] = t[i-1 mod n] - t[i]
        const std::size_t ip = (mode == 1) ? (i + n1 - 1) % n1 : i;
        const std::size_t jp = (mode == 2) ? (j + n2 - 1) % n2 : j;
        for (std::size_t k = 0; k < n3; ++k)
            out(i, j, k) = t(ip, jp, k) - t(i, j, k);
    }
    return out;
}

Tensor3 operator+(const Tensor3& a, const Tensor3& b) {
    check_same_dims(a, b);
    Tensor3 out = a;
    for (std::size_t n = 0; n < out.size(); ++n) out.data()[n] += b.data()[n];
    return out;
}

Tensor3 operator-(const Tensor3& a, const Tensor3& b) {
    check_same_dims(a, b);
    Tensor3 out = a;
    for (std::size_t n = 0; n < out.size(); ++n) out.data()[n] -= b.data()[n];
    return out;
}

Tensor3 operator*(double s, const Tensor3& a) {
    Tensor3 out = a;
    for (double& v : out.data()) v *= s;
    return out;
}

Tensor3& operator+=(Tensor3& a, const Tensor3& b) {
    check_same_dims(a, b);
    for (std::size_t n = 0; n < a.size(); ++n) a.data()[n] += b.data()[n];
    return a;
}

Tensor3& operator-=(Tensor3& a, const Tensor3& b) {
    check_same_dims(a, b);
    for (std::size_t n = 0; n < a.size(); ++n) a.data()[n] -= b.data()[n];
    return a;
}

} // namespace tlsm
