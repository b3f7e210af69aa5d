#include "tlsm/tsvd.hpp"

#include "tlsm/fft.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tlsm {

namespace {

using MatrixXcd = Eigen::MatrixXcd;

// Frontal slice k of a spectral tensor as an Eigen matrix (gather; the
// canonical layout strides slices by n3).
MatrixXcd gather_slice(const SpectralTensor3& s, std::size_t k) {
    MatrixXcd m(s.n1(), s.n2());
    for (std::size_t i = 0; i < s.n1(); ++i)
        for (std::size_t j = 0; j < s.n2(); ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s(i, j, k);
    return m;
}

void scatter_slice(SpectralTensor3& s, std::size_t k, const MatrixXcd& m) {
    for (std::size_t i = 0; i < s.n1(); ++i)
        for (std::size_t j = 0; j < s.n2(); ++j)
            s(i, j, k) = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
}

} // namespace

Tensor3 t_product(const Tensor3& a, const Tensor3& b) {
    if (a.n2() != b.n1() || a.n3() != b.n3())
        throw std::invalid_argument("t_product: dimension mismatch");
    const std::size_t n3 = a.n3();
    SpectralTensor3 ah = fft_mode3(a);
    SpectralTensor3 bh = fft_mode3(b);
    SpectralTensor3 ch(a.n1(), b.n2(), n3);
#pragma omp parallel for
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(n3); ++k) {
        const MatrixXcd prod = gather_slice(ah, static_cast<std::size_t>(k)) *
                               gather_slice(bh, static_cast<std::size_t>(k));
        scatter_slice(ch, static_cast<std::size_t>(k), prod);
    }
    return ifft_mode3(ch);
}

Tensor3 t_transpose(const Tensor3& t) {
    const auto [n1, n2, n3] = t.dims();
    Tensor3 out(n2, n1, n3);
    for (std::size_t k = 0; k < n3; ++k) {
        const std::size_t ks = (k == 0) ? 0 : n3 - k; // reverse slices 2..n3
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t j = 0; j < n2; ++j)
                out(j, i, ks) = t(i, j, k);
    }
    return out;
}

Tensor3 identity_tensor(std::size_t n, std::size_t n3) {
    Tensor3 out(n, n, n3);
    for (std::size_t i = 0; i < n; ++i) out(i, i, 0) = 1.0;
    return out;
}

TSvdFactors t_svd(const Tensor3& l) {
    const auto [n1, n2, n3] = l.dims();
    const std::size_t m = std::min(n1, n2);

    SpectralTensor3 lh = fft_mode3(l);

    TSvdFactors f;
    f.u_hat = SpectralTensor3(n1, n1, n3);
    f.v_hat = SpectralTensor3(n2, n2, n3);
    f.spectral_singulars.assign(n3, std::vector<double>(m, 0.0));
    SpectralTensor3 sh(n1, n2, n3);

    int failed_slice = -1;
    // The transform of a real tensor is conjugate-symmetric across k; only
    // slices k <= n3-k need an SVD, the mirror is the conjugate.
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(n3); ++k) {
        const std::size_t kk = static_cast<std::size_t>(k);
        const std::size_t mirror = (n3 - kk) % n3;
        if (kk > mirror) continue;

        Eigen::BDCSVD<MatrixXcd> svd(gather_slice(lh, kk),
                                     Eigen::ComputeFullU | Eigen::ComputeFullV);
        if (svd.info() != Eigen::Success) {
#pragma omp critical
            failed_slice = static_cast<int>(kk);
            continue;
        }
        const MatrixXcd& u = svd.matrixU();
        const MatrixXcd& v = svd.matrixV();
        const Eigen::VectorXd sv = svd.singularValues();

        scatter_slice(f.u_hat, kk, u);
        scatter_slice(f.v_hat, kk, v);
        for (std::size_t i = 0; i < m; ++i) {
            f.spectral_singulars[kk][i] = sv(static_cast<Eigen::Index>(i));
            sh(i, i, kk) = sv(static_cast<Eigen::Index>(i));
        }
        if (mirror != kk) {
            scatter_slice(f.u_hat, mirror, u.conjugate());
            scatter_slice(f.v_hat, mirror, v.conjugate());
            for (std::size_t i = 0; i < m; ++i) {
                f.spectral_singulars[mirror][i] = sv(static_cast<Eigen::Index>(i));
                sh(i, i, mirror) = sv(static_cast<Eigen::Index>(i));
            }
        }
    }
    if (failed_slice >= 0)
        throw std::runtime_error("t_svd: SVD did not converge on frequency slice " +
                                 std::to_string(failed_slice));

    f.u = ifft_mode3(f.u_hat);
    f.s = ifft_mode3(sh);
    f.v = ifft_mode3(f.v_hat);
    return f;
}

Tensor3 t_reconstruct(const TSvdFactors& f,
                      const std::vector<std::vector<double>>& singulars) {
    const std::size_t n1 = f.u_hat.n1();
    const std::size_t n2 = f.v_hat.n1();
    const std::size_t n3 = f.u_hat.n3();
    const std::size_t m = std::min(n1, n2);

    if (singulars.size() != n3)
        throw std::invalid_argument("t_reconstruct: singular list count mismatch");
    for (const auto& list : singulars)
        if (list.size() != m)
            throw std::invalid_argument("t_reconstruct: singular list length mismatch");

    SpectralTensor3 zh(n1, n2, n3);
#pragma omp parallel for
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(n3); ++k) {
        const std::size_t kk = static_cast<std::size_t>(k);
        const MatrixXcd u = gather_slice(f.u_hat, kk);
        const MatrixXcd v = gather_slice(f.v_hat, kk);
        Eigen::VectorXd sv(static_cast<Eigen::Index>(m));
        for (std::size_t i = 0; i < m; ++i) sv(static_cast<Eigen::Index>(i)) = singulars[kk][i];
        const MatrixXcd slice = u.leftCols(static_cast<Eigen::Index>(m)) *
                                sv.asDiagonal() *
                                v.leftCols(static_cast<Eigen::Index>(m)).adjoint();
        scatter_slice(zh, kk, slice);
    }
    return ifft_mode3(zh);
}

} // namespace tlsm
