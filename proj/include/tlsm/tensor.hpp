#ifndef TLSM_TENSOR_HPP
#define TLSM_TENSOR_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

namespace tlsm {

/// Dense real-valued n1 x n2 x n3 tensor.
///
/// Canonical layout: entry (i, j, k) lives at offset (i*n2 + j)*n3 + k, i.e.
/// row-major over (i, j, k) with the third index fastest.  Mode-3 tubes are
/// contiguous.  File I/O and the spectral transforms assume this layout.
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(std::size_t n1, std::size_t n2, std::size_t n3)
        : dims_{n1, n2, n3}, data_(n1 * n2 * n3, 0.0) {}

    std::array<std::size_t, 3> dims() const { return dims_; }
    std::size_t n1() const { return dims_[0]; }
    std::size_t n2() const { return dims_[1]; }
    std::size_t n3() const { return dims_[2]; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t i, std::size_t j, std::size_t k) {
        return data_[(i * dims_[1] + j) * dims_[2] + k];
    }
    double operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return data_[(i * dims_[1] + j) * dims_[2] + k];
    }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    bool same_dims(const Tensor3& other) const { return dims_ == other.dims_; }

private:
    std::array<std::size_t, 3> dims_{0, 0, 0};
    std::vector<double> data_;
};

/// Complex-valued companion of Tensor3, same canonical layout.  Holds the
/// mode-3 discrete Fourier image of a real tensor.
class SpectralTensor3 {
public:
    SpectralTensor3() = default;
    SpectralTensor3(std::size_t n1, std::size_t n2, std::size_t n3)
        : dims_{n1, n2, n3}, data_(n1 * n2 * n3) {}

    std::array<std::size_t, 3> dims() const { return dims_; }
    std::size_t n1() const { return dims_[0]; }
    std::size_t n2() const { return dims_[1]; }
    std::size_t n3() const { return dims_[2]; }
    std::size_t size() const { return data_.size(); }

    std::complex<double>& operator()(std::size_t i, std::size_t j, std::size_t k) {
        return data_[(i * dims_[1] + j) * dims_[2] + k];
    }
    const std::complex<double>& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return data_[(i * dims_[1] + j) * dims_[2] + k];
    }

    std::vector<std::complex<double>>& data() { return data_; }
    const std::vector<std::complex<double>>& data() const { return data_; }

private:
    std::array<std::size_t, 3> dims_{0, 0, 0};
    std::vector<std::complex<double>> data_;
};

double frobenius_norm(const Tensor3& t);
double max_abs(const Tensor3& t);
bool all_finite(const Tensor3& t);

/// Circular first-order difference along mode 1 or 2:
/// out[i] = t[i+1 mod n] - t[i] along the chosen mode.
Tensor3 diff_circular(const Tensor3& t, int mode);

/// Adjoint of diff_circular: <diff_circular(x, m), y> = <x, diff_adjoint(y, m)>.
Tensor3 diff_adjoint(const Tensor3& t, int mode);

Tensor3 operator+(const Tensor3& a, const Tensor3& b);
Tensor3 operator-(const Tensor3& a, const Tensor3& b);
Tensor3 operator*(double s, const Tensor3& a);
Tensor3& operator+=(Tensor3& a, const Tensor3& b);
Tensor3& operator-=(Tensor3& a, const Tensor3& b);

} // namespace tlsm

#endif
