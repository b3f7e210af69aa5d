#ifndef TLSM_LSM_HPP
#define TLSM_LSM_HPP

#include <span>
#include <vector>

namespace tlsm {

/// Weights of one Laplacian-scale-mixture shrinkage problem
///   min over (alpha, theta) of
///     quad_weight/2 * ||g - diag(theta) alpha||^2
///     + sqrt(2) * penalty_weight * ||alpha||_1
///     + 2 * penalty_weight * sum_i log(theta_i + epsilon).
struct LsmParams {
    double penalty_weight; // tau, lambda1 or lambda2
    double quad_weight;    // a, b or c
    double epsilon = 1e-6;
};

/// Laplacian coefficients alpha and hidden scalar multipliers theta >= 0 of
/// one shrinkage problem; the recovered signal is theta[i] * alpha[i].
struct LsmPair {
    std::vector<double> alpha;
    std::vector<double> theta;
};

double soft_threshold(double x, double t);

/// Scalar multiplier update: the nonnegative minimiser of
/// f(theta) = r theta^2 + p theta + 2 tau log(theta + eps) with
/// r = quad/2 * alpha^2 and p = -quad * g * alpha.  Returns 0 when the
/// stationary-point discriminant is negative (or alpha is 0); otherwise the
/// argmin over {0} and the nonnegative stationary points.
double solve_theta(double g, double alpha, const LsmParams& p);

/// Coefficient update given the multipliers: soft_threshold(g_i / theta_i,
/// sqrt(2)*penalty/quad) where theta_i > epsilon, 0 elsewhere.
std::vector<double> solve_alpha(std::span<const double> g,
                                std::span<const double> theta,
                                const LsmParams& p);

/// Alternate solve_theta (elementwise) and solve_alpha for inner_iters
/// rounds, starting from alpha = g, theta = 1.
LsmPair lsm_shrink(std::span<const double> g, const LsmParams& p, int inner_iters);

/// The objective the pair minimises (see LsmParams).
double lsm_objective(std::span<const double> g, const LsmPair& pair, const LsmParams& p);

/// Recovered signal theta[i] * alpha[i].
std::vector<double> lsm_recovered(const LsmPair& pair);

} // namespace tlsm

#endif
