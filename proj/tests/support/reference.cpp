#include "reference.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tlsm::reference {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

std::complex<double> twiddle(std::size_t p, std::size_t k, std::size_t n, double sign) {
    const double ang = sign * 2.0 * std::numbers::pi * static_cast<double>(p * k % n) /
                       static_cast<double>(n);
    return {std::cos(ang), std::sin(ang)};
}

// Dense circular difference matrix: D x = shift(x) - x.
MatrixXd diff_matrix(std::size_t n) {
    MatrixXd d = -MatrixXd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>((i + 1) % n)) += 1.0;
    return d;
}

MatrixXcd dft_slice(const Tensor3& t, std::size_t k) {
    const auto [n1, n2, n3] = t.dims();
    MatrixXcd m(n1, n2);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j) {
            std::complex<double> acc{0.0, 0.0};
            for (std::size_t kk = 0; kk < n3; ++kk)
                acc += t(i, j, kk) * twiddle(k, kk, n3, -1.0);
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = acc;
        }
    return m;
}

} // namespace

SpectralTensor3 naive_dft_mode3(const Tensor3& t) {
    const auto [n1, n2, n3] = t.dims();
    SpectralTensor3 out(n1, n2, n3);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j)
            for (std::size_t p = 0; p < n3; ++p) {
                std::complex<double> acc{0.0, 0.0};
                for (std::size_t k = 0; k < n3; ++k)
                    acc += t(i, j, k) * twiddle(p, k, n3, -1.0);
                out(i, j, p) = acc;
            }
    return out;
}

Tensor3 naive_idft_mode3(const SpectralTensor3& s) {
    const auto [n1, n2, n3] = s.dims();
    Tensor3 out(n1, n2, n3);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j)
            for (std::size_t k = 0; k < n3; ++k) {
                std::complex<double> acc{0.0, 0.0};
                for (std::size_t p = 0; p < n3; ++p)
                    acc += s(i, j, p) * twiddle(p, k, n3, 1.0);
                out(i, j, k) = acc.real() / static_cast<double>(n3);
            }
    return out;
}

Tensor3 circulant_diff(const Tensor3& t, int mode) {
    const auto [n1, n2, n3] = t.dims();
    const std::size_t n = mode == 1 ? n1 : n2;
    const MatrixXd d = diff_matrix(n);
    Tensor3 out(n1, n2, n3);
    for (std::size_t k = 0; k < n3; ++k) {
        if (mode == 1) {
            for (std::size_t j = 0; j < n2; ++j) {
                VectorXd tube(static_cast<Eigen::Index>(n1));
                for (std::size_t i = 0; i < n1; ++i) tube(static_cast<Eigen::Index>(i)) = t(i, j, k);
                const VectorXd res = d * tube;
                for (std::size_t i = 0; i < n1; ++i) out(i, j, k) = res(static_cast<Eigen::Index>(i));
            }
        } else {
            for (std::size_t i = 0; i < n1; ++i) {
                VectorXd tube(static_cast<Eigen::Index>(n2));
                for (std::size_t j = 0; j < n2; ++j) tube(static_cast<Eigen::Index>(j)) = t(i, j, k);
                const VectorXd res = d * tube;
                for (std::size_t j = 0; j < n2; ++j) out(i, j, k) = res(static_cast<Eigen::Index>(j));
            }
        }
    }
    return out;
}

Tensor3 bcirc_t_product(const Tensor3& a, const Tensor3& b) {
    if (a.n2() != b.n1() || a.n3() != b.n3())
        throw std::invalid_argument("bcirc_t_product: dimension mismatch");
    const std::size_t n1 = a.n1(), p = a.n2(), n2 = b.n2(), n3 = a.n3();

    MatrixXd bc(n1 * n3, p * n3);
    for (std::size_t br = 0; br < n3; ++br)
        for (std::size_t bcol = 0; bcol < n3; ++bcol) {
            const std::size_t slice = (br + n3 - bcol) % n3;
            for (std::size_t i = 0; i < n1; ++i)
                for (std::size_t j = 0; j < p; ++j)
                    bc(static_cast<Eigen::Index>(br * n1 + i),
                       static_cast<Eigen::Index>(bcol * p + j)) = a(i, j, slice);
        }

    MatrixXd unfold(p * n3, n2);
    for (std::size_t k = 0; k < n3; ++k)
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < n2; ++j)
                unfold(static_cast<Eigen::Index>(k * p + i), static_cast<Eigen::Index>(j)) =
                    b(i, j, k);

    const MatrixXd prod = bc * unfold;
    Tensor3 out(n1, n2, n3);
    for (std::size_t k = 0; k < n3; ++k)
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t j = 0; j < n2; ++j)
                out(i, j, k) = prod(static_cast<Eigen::Index>(k * n1 + i),
                                    static_cast<Eigen::Index>(j));
    return out;
}

std::vector<std::vector<double>> slice_singular_values(const Tensor3& l) {
    const std::size_t n3 = l.n3();
    std::vector<std::vector<double>> out(n3);
    for (std::size_t k = 0; k < n3; ++k) {
        Eigen::JacobiSVD<MatrixXcd> svd(dft_slice(l, k));
        const VectorXd sv = svd.singularValues();
        out[k].assign(sv.data(), sv.data() + sv.size());
    }
    return out;
}

Tensor3 svt_shrink(const Tensor3& l, double threshold) {
    const auto [n1, n2, n3] = l.dims();
    SpectralTensor3 shrunk(n1, n2, n3);
    for (std::size_t k = 0; k < n3; ++k) {
        Eigen::JacobiSVD<MatrixXcd> svd(dft_slice(l, k),
                                        Eigen::ComputeThinU | Eigen::ComputeThinV);
        VectorXd sv = svd.singularValues();
        for (Eigen::Index i = 0; i < sv.size(); ++i)
            sv(i) = std::max(sv(i) - threshold, 0.0);
        const MatrixXcd rebuilt = svd.matrixU() * sv.asDiagonal() * svd.matrixV().adjoint();
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t j = 0; j < n2; ++j)
                shrunk(i, j, k) = rebuilt(static_cast<Eigen::Index>(i),
                                          static_cast<Eigen::Index>(j));
    }
    return naive_idft_mode3(shrunk);
}

Tensor3 dense_update_x(const SolverState& state, const Tensor3& y, const SolverConfig& cfg) {
    const auto [n1, n2, n3] = y.dims();
    const std::size_t dim = n1 * n2;

    const MatrixXd d1 = diff_matrix(n1);
    const MatrixXd d2 = diff_matrix(n2);
    const MatrixXd dtd1 = d1.transpose() * d1;
    const MatrixXd dtd2 = d2.transpose() * d2;

    // (1 + a) I + b (I (x) D2'D2) + c (D1'D1 (x) I), row-major (i, j) vec.
    MatrixXd m = MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j) {
            const Eigen::Index row = static_cast<Eigen::Index>(i * n2 + j);
            m(row, row) += 1.0 + cfg.a;
            for (std::size_t jj = 0; jj < n2; ++jj)
                m(row, static_cast<Eigen::Index>(i * n2 + jj)) +=
                    cfg.b * dtd2(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(jj));
            for (std::size_t ii = 0; ii < n1; ++ii)
                m(row, static_cast<Eigen::Index>(ii * n2 + j)) +=
                    cfg.c * dtd1(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(ii));
        }
    const Eigen::PartialPivLU<MatrixXd> lu(m);

    // Same right-hand side as the solver, built with the reference diffs.
    Tensor3 rhs = cfg.a * (state.z - state.bb) + y;
    {
        // adjoints via the transposed circulant matrices
        Tensor3 t2 = state.d2 - state.b2;
        Tensor3 adj2(n1, n2, n3);
        const MatrixXd d2t = diff_matrix(n2).transpose();
        for (std::size_t k = 0; k < n3; ++k)
            for (std::size_t i = 0; i < n1; ++i) {
                VectorXd tube(static_cast<Eigen::Index>(n2));
                for (std::size_t j = 0; j < n2; ++j) tube(static_cast<Eigen::Index>(j)) = t2(i, j, k);
                const VectorXd res = d2t * tube;
                for (std::size_t j = 0; j < n2; ++j) adj2(i, j, k) = res(static_cast<Eigen::Index>(j));
            }
        rhs += cfg.b * adj2;

        Tensor3 t1 = state.d1 + circulant_diff(y, 1) - state.b1;
        Tensor3 adj1(n1, n2, n3);
        const MatrixXd d1t = diff_matrix(n1).transpose();
        for (std::size_t k = 0; k < n3; ++k)
            for (std::size_t j = 0; j < n2; ++j) {
                VectorXd tube(static_cast<Eigen::Index>(n1));
                for (std::size_t i = 0; i < n1; ++i) tube(static_cast<Eigen::Index>(i)) = t1(i, j, k);
                const VectorXd res = d1t * tube;
                for (std::size_t i = 0; i < n1; ++i) adj1(i, j, k) = res(static_cast<Eigen::Index>(i));
            }
        rhs += cfg.c * adj1;
    }

    Tensor3 x(n1, n2, n3);
    for (std::size_t k = 0; k < n3; ++k) {
        VectorXd v(static_cast<Eigen::Index>(dim));
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t j = 0; j < n2; ++j)
                v(static_cast<Eigen::Index>(i * n2 + j)) = rhs(i, j, k);
        const VectorXd sol = lu.solve(v);
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t j = 0; j < n2; ++j)
                x(i, j, k) = sol(static_cast<Eigen::Index>(i * n2 + j));
    }
    return x;
}

ThetaGridSearch::ThetaGridSearch(double theta_max, double step, double epsilon) : step_(step) {
    const std::size_t count = static_cast<std::size_t>(std::llround(theta_max / step)) + 1;
    log_table_.resize(count);
    for (std::size_t i = 0; i < count; ++i)
        log_table_[i] = 2.0 * std::log(static_cast<double>(i) * step + epsilon);
}

ThetaGridSearch::Result ThetaGridSearch::search(double g, double alpha, double quad_weight,
                                                double tau) const {
    const double r = 0.5 * quad_weight * alpha * alpha;
    const double p = -quad_weight * g * alpha;
    double best_val = tau * log_table_[0];
    double best_theta = 0.0;
    for (std::size_t i = 1; i < log_table_.size(); ++i) {
        const double th = static_cast<double>(i) * step_;
        const double val = (r * th + p) * th + tau * log_table_[i];
        if (val < best_val) {
            best_val = val;
            best_theta = th;
        }
    }
    return {best_theta, best_val};
}

double ssim_literal(const Tensor3& x, const Tensor3& ref, double dynamic_range) {
    if (!x.same_dims(ref)) throw std::invalid_argument("ssim_literal: dimension mismatch");
    constexpr std::size_t win = 11;
    constexpr double sigma = 1.5;
    const auto [n1, n2, n3] = x.dims();
    if (n1 < win || n2 < win) throw std::invalid_argument("ssim_literal: slice too small");

    double w[win][win];
    double wsum = 0.0;
    for (std::size_t u = 0; u < win; ++u)
        for (std::size_t v = 0; v < win; ++v) {
            const double du = static_cast<double>(u) - 5.0;
            const double dv = static_cast<double>(v) - 5.0;
            w[u][v] = std::exp(-(du * du + dv * dv) / (2.0 * sigma * sigma));
            wsum += w[u][v];
        }
    for (std::size_t u = 0; u < win; ++u)
        for (std::size_t v = 0; v < win; ++v) w[u][v] /= wsum;

    const double c1 = (0.01 * dynamic_range) * (0.01 * dynamic_range);
    const double c2 = (0.03 * dynamic_range) * (0.03 * dynamic_range);

    double total = 0.0;
    for (std::size_t k = 0; k < n3; ++k) {
        double slice_acc = 0.0;
        const std::size_t m1 = n1 - win + 1, m2 = n2 - win + 1;
        for (std::size_t i0 = 0; i0 < m1; ++i0)
            for (std::size_t j0 = 0; j0 < m2; ++j0) {
                double mx = 0, my = 0, mxx = 0, myy = 0, mxy = 0;
                for (std::size_t u = 0; u < win; ++u)
                    for (std::size_t v = 0; v < win; ++v) {
                        const double a = x(i0 + u, j0 + v, k);
                        const double b = ref(i0 + u, j0 + v, k);
                        mx += w[u][v] * a;
                        my += w[u][v] * b;
                        mxx += w[u][v] * a * a;
                        myy += w[u][v] * b * b;
                        mxy += w[u][v] * a * b;
                    }
                const double vx = mxx - mx * mx;
                const double vy = myy - my * my;
                const double cov = mxy - mx * my;
                slice_acc += ((2.0 * mx * my + c1) * (2.0 * cov + c2)) /
                             ((mx * mx + my * my + c1) * (vx + vy + c2));
            }
        total += slice_acc / static_cast<double>(m1 * m2);
    }
    return total / static_cast<double>(n3);
}

} // namespace tlsm::reference
