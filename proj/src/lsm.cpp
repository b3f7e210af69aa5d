#include "tlsm/lsm.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace tlsm {

namespace {

void check_params(const LsmParams& p) {
    if (!(p.penalty_weight > 0.0) || !(p.quad_weight > 0.0) || !(p.epsilon > 0.0))
        throw std::invalid_argument("LsmParams fields must be positive");
    if (p.epsilon > 1e-3)
        throw std::invalid_argument("LsmParams epsilon must be <= 1e-3");
}

} // namespace

double soft_threshold(double x, double t) {
    const double mag = std::abs(x) - t;
    return mag > 0.0 ? std::copysign(mag, x) : 0.0;
}

double solve_theta(double g, double alpha, const LsmParams& prm) {
    const double tau = prm.penalty_weight;
    const double eps = prm.epsilon;
    if (alpha == 0.0) return 0.0; // r = p = 0, objective increasing on theta >= 0

    const double r = 0.5 * prm.quad_weight * alpha * alpha;
    const double p = -prm.quad_weight * g * alpha;
    const double disc = (p * p - 16.0 * r * tau) / (16.0 * r * r);
    if (disc < 0.0) return 0.0;

    const auto f = [&](double th) {
        return r * th * th + p * th + 2.0 * tau * std::log(th + eps);
    };
    const double root = std::sqrt(disc);
    const double mid = -p / (4.0 * r);
    double best = 0.0;
    double best_val = f(0.0);
    for (double cand : {mid + root, mid - root}) {
        if (cand < 0.0) continue; // stationary point outside the domain
        const double val = f(cand);
        if (val < best_val) {
            best_val = val;
            best = cand;
        }
    }
    return best;
}

std::vector<double> solve_alpha(std::span<const double> g,
                                std::span<const double> theta,
                                const LsmParams& prm) {
    if (g.size() != theta.size())
        throw std::invalid_argument("solve_alpha: length mismatch");
    const double thr = std::sqrt(2.0) * prm.penalty_weight / prm.quad_weight;
    std::vector<double> alpha(g.size());
#pragma omp parallel for if (g.size() > 4096)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(g.size()); ++i)
        alpha[i] = theta[i] > prm.epsilon ? soft_threshold(g[i] / theta[i], thr) : 0.0;
    return alpha;
}

LsmPair lsm_shrink(std::span<const double> g, const LsmParams& prm, int inner_iters) {
    check_params(prm);
    if (inner_iters < 1)
        throw std::invalid_argument("lsm_shrink: inner_iters must be >= 1");

    LsmPair pair;
    pair.alpha.assign(g.begin(), g.end());
    pair.theta.assign(g.size(), 1.0);

    for (int it = 0; it < inner_iters; ++it) {
#pragma omp parallel for if (g.size() > 4096)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(g.size()); ++i)
            pair.theta[i] = solve_theta(g[i], pair.alpha[i], prm);
        pair.alpha = solve_alpha(g, pair.theta, prm);
    }
    return pair;
}

double lsm_objective(std::span<const double> g, const LsmPair& pair, const LsmParams& prm) {
    if (g.size() != pair.alpha.size() || g.size() != pair.theta.size())
        throw std::invalid_argument("lsm_objective: length mismatch");
    double quad = 0.0, l1 = 0.0, logs = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double resid = g[i] - pair.theta[i] * pair.alpha[i];
        quad += resid * resid;
        l1 += std::abs(pair.alpha[i]);
        logs += std::log(pair.theta[i] + prm.epsilon);
    }
    return 0.5 * prm.quad_weight * quad + std::sqrt(2.0) * prm.penalty_weight * l1 +
           2.0 * prm.penalty_weight * logs;
}

std::vector<double> lsm_recovered(const LsmPair& pair) {
    std::vector<double> s(pair.alpha.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = pair.theta[i] * pair.alpha[i];
    return s;
}

} // namespace tlsm
