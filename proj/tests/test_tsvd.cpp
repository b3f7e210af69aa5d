#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tlsm/lsm.hpp"
#include "tlsm/tsvd.hpp"

#include "support/reference.hpp"
#include "support/testutil.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <random>

using namespace tlsm;
using testutil::random_tensor;
using testutil::rel_error;

namespace {

double tnn(const std::vector<std::vector<double>>& singulars) {
    double acc = 0.0;
    for (const auto& list : singulars)
        for (double s : list) acc += s;
    return acc / static_cast<double>(singulars.size());
}

} // namespace

TEST_CASE("t_product degenerates to the matrix product at n3 = 1") {
    std::mt19937_64 rng(21);
    const Tensor3 a = random_tensor(3, 4, 1, rng);
    const Tensor3 b = random_tensor(4, 2, 1, rng);
    const Tensor3 c = t_product(a, b);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            double want = 0.0;
            for (std::size_t p = 0; p < 4; ++p) want += a(i, p, 0) * b(p, j, 0);
            CHECK(c(i, j, 0) == doctest::Approx(want).epsilon(1e-12));
        }
}

TEST_CASE("t_product with the identity tensor") {
    std::mt19937_64 rng(22);
    const Tensor3 a = random_tensor(3, 3, 4, rng);
    CHECK(rel_error(t_product(a, identity_tensor(3, 4)), a) < 1e-13);
    CHECK(rel_error(t_product(identity_tensor(3, 4), a), a) < 1e-13);
}

TEST_CASE("t_product matches the block-circulant oracle") {
    std::mt19937_64 rng(23);
    const Tensor3 a = random_tensor(3, 2, 4, rng);
    const Tensor3 b = random_tensor(2, 5, 4, rng);
    CHECK(rel_error(t_product(a, b), reference::bcirc_t_product(a, b)) < 1e-12);
}

TEST_CASE("t_product rejects mismatched dimensions") {
    Tensor3 a(3, 2, 4), b(3, 5, 4), c(2, 5, 3);
    CHECK_THROWS_AS(t_product(a, b), std::invalid_argument);
    CHECK_THROWS_AS(t_product(a, c), std::invalid_argument);
}

TEST_CASE("t_svd of the zero tensor") {
    const TSvdFactors f = t_svd(Tensor3(4, 3, 5));
    CHECK(frobenius_norm(f.s) == 0.0);
    for (const auto& list : f.spectral_singulars)
        for (double s : list) CHECK(s == 0.0);
}

TEST_CASE("t_svd at n3 = 1 matches the matrix SVD") {
    std::mt19937_64 rng(24);
    const Tensor3 l = random_tensor(5, 4, 1, rng);
    const TSvdFactors f = t_svd(l);
    Eigen::MatrixXd m(5, 4);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = l(i, j, 0);
    const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues();
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(f.spectral_singulars[0][i] == doctest::Approx(sv(static_cast<Eigen::Index>(i)))
                                                .epsilon(1e-12));
}

TEST_CASE("t_svd per-frequency singular values match the per-slice oracle") {
    std::mt19937_64 rng(25);
    const Tensor3 l = random_tensor(6, 5, 4, rng);
    const TSvdFactors f = t_svd(l);
    const auto oracle = reference::slice_singular_values(l);
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t i = 0; i < 5; ++i)
            CHECK(std::abs(f.spectral_singulars[k][i] - oracle[k][i]) < 1e-10);
}

TEST_CASE("t_svd factors reconstruct and are orthogonal") {
    std::mt19937_64 rng(26);
    for (auto [n1, n2, n3] : {std::array<std::size_t, 3>{4, 4, 3},
                              std::array<std::size_t, 3>{6, 5, 4},
                              std::array<std::size_t, 3>{8, 8, 8},
                              std::array<std::size_t, 3>{3, 7, 6}}) {
        const Tensor3 l = random_tensor(n1, n2, n3, rng);
        const TSvdFactors f = t_svd(l);

        const Tensor3 rebuilt = t_product(t_product(f.u, f.s), t_transpose(f.v));
        CHECK(rel_error(rebuilt, l) < 1e-10);

        CHECK(rel_error(t_product(t_transpose(f.u), f.u), identity_tensor(n1, n3)) < 1e-10);
        CHECK(rel_error(t_product(t_transpose(f.v), f.v), identity_tensor(n2, n3)) < 1e-10);

        for (const auto& list : f.spectral_singulars)
            for (std::size_t i = 0; i + 1 < list.size(); ++i) {
                CHECK(list[i] >= 0.0);
                CHECK(list[i] >= list[i + 1]);
            }
    }
}

TEST_CASE("t_reconstruct identity and zero replacements") {
    std::mt19937_64 rng(27);
    const Tensor3 l = random_tensor(5, 5, 3, rng);
    const TSvdFactors f = t_svd(l);
    CHECK(rel_error(t_reconstruct(f, f.spectral_singulars), l) < 1e-10);

    auto zeros = f.spectral_singulars;
    for (auto& list : zeros)
        for (double& s : list) s = 0.0;
    CHECK(frobenius_norm(t_reconstruct(f, zeros)) < 1e-12);
}

TEST_CASE("t_reconstruct with soft-thresholded singular values") {
    std::mt19937_64 rng(28);
    const Tensor3 l = random_tensor(5, 5, 3, rng);
    const TSvdFactors f = t_svd(l);
    const double thr = 0.4;
    auto shrunk = f.spectral_singulars;
    for (auto& list : shrunk)
        for (double& s : list) s = soft_threshold(s, thr);
    const Tensor3 z = t_reconstruct(f, shrunk);
    CHECK(frobenius_norm(z) <= frobenius_norm(l) + 1e-12);
    CHECK(rel_error(z, reference::svt_shrink(l, thr)) < 1e-10);
}

TEST_CASE("t_reconstruct rejects malformed singular lists") {
    const TSvdFactors f = t_svd(Tensor3(3, 4, 2));
    CHECK_THROWS_AS(t_reconstruct(f, {}), std::invalid_argument);
    std::vector<std::vector<double>> bad(2, std::vector<double>(2, 0.0));
    CHECK_THROWS_AS(t_reconstruct(f, bad), std::invalid_argument);
}

TEST_CASE("shrinking singular values never grows the reconstruction") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> thr_dist(0.0, 2.0);
    for (int trial = 0; trial < 10; ++trial) {
        const Tensor3 l = random_tensor(6, 4, 5, rng);
        const TSvdFactors f = t_svd(l);
        auto shrunk = f.spectral_singulars;
        const double thr = thr_dist(rng);
        for (auto& list : shrunk)
            for (double& s : list) s = soft_threshold(s, thr);
        CHECK(frobenius_norm(t_reconstruct(f, shrunk)) <= frobenius_norm(l) + 1e-12);
    }
}

TEST_CASE("per-frequency nuclear norm is invariant under orthogonal t-products") {
    std::mt19937_64 rng(30);
    const Tensor3 l = random_tensor(5, 4, 3, rng);
    const Tensor3 q = t_svd(random_tensor(5, 5, 3, rng)).u; // orthogonal
    const double before = tnn(t_svd(l).spectral_singulars);
    const double after = tnn(t_svd(t_product(q, l)).spectral_singulars);
    CHECK(before == doctest::Approx(after).epsilon(1e-10));
}
