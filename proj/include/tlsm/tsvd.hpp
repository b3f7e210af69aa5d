#ifndef TLSM_TSVD_HPP
#define TLSM_TSVD_HPP

#include "tlsm/tensor.hpp"

#include <vector>

namespace tlsm {

/// Factors of a tensor singular value decomposition L = U * S * V^T, where *
/// is the t-product.  u and v are orthogonal under the t-product; s is
/// f-diagonal.  spectral_singulars[k] holds the singular values of the k-th
/// frequency slice (nonincreasing, length min(n1, n2)).  The Fourier-domain
/// factors are kept alongside so reconstruction does not re-transform.
struct TSvdFactors {
    Tensor3 u; // n1 x n1 x n3
    Tensor3 s; // n1 x n2 x n3
    Tensor3 v; // n2 x n2 x n3
    std::vector<std::vector<double>> spectral_singulars; // [n3][min(n1,n2)]
    SpectralTensor3 u_hat;
    SpectralTensor3 v_hat;
};

/// t-product c = a * b: per-frequency matrix products in the Fourier domain.
/// Requires a: n1 x p x n3 and b: p x n2 x n3.
Tensor3 t_product(const Tensor3& a, const Tensor3& b);

/// Tensor transpose: each frontal slice transposed, slices 2..n3 reversed.
Tensor3 t_transpose(const Tensor3& t);

/// Identity tensor for the t-product: first frontal slice I, the rest zero.
Tensor3 identity_tensor(std::size_t n, std::size_t n3);

/// t-SVD via one full matrix SVD per frequency slice.  Conjugate-symmetric
/// slices are mirrored instead of refactored.  Throws on SVD failure with
/// the offending slice index.
TSvdFactors t_svd(const Tensor3& l);

/// Rebuild U * S' * V^T with replacement singular values (same list shape as
/// spectral_singulars, entries >= 0, conjugate-symmetric across frequencies).
/// The imaginary residue of the inverse transform is truncated.
Tensor3 t_reconstruct(const TSvdFactors& f,
                      const std::vector<std::vector<double>>& singulars);

} // namespace tlsm

#endif
