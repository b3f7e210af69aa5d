#ifndef TLSM_FFT_HPP
#define TLSM_FFT_HPP

#include "tlsm/tensor.hpp"

namespace tlsm {

/// Discrete Fourier transform along mode 3, one DFT per tube.
///
/// Convention (fixed project-wide): the forward transform is unnormalised,
/// X[p] = sum_k x[k] exp(-2*pi*i*p*k/n3); the inverse carries the 1/n3
/// factor.  All spectral formulas elsewhere assume this pair.
SpectralTensor3 fft_mode3(const Tensor3& t);

/// Inverse of fft_mode3 (scaled by 1/n3).  The imaginary residue is dropped;
/// callers must pass conjugate-symmetric spectra for the result to be
/// meaningful.  Use ifft_mode3_full when the residue matters.
Tensor3 ifft_mode3(const SpectralTensor3& s);

/// Full complex inverse transform along mode 3, scaled by 1/n3.
SpectralTensor3 ifft_mode3_full(const SpectralTensor3& s);

namespace detail {

/// Unnormalised 2-D DFT of one n1 x n2 frontal slice, contiguous row-major
/// buffers of length n1*n2.  sign = -1 forward, +1 backward (unscaled).
void fft2(const std::complex<double>* in, std::complex<double>* out,
          std::size_t n1, std::size_t n2, int sign);

} // namespace detail

} // namespace tlsm

#endif
