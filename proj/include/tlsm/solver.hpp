#ifndef TLSM_SOLVER_HPP
#define TLSM_SOLVER_HPP

#include "tlsm/tensor.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tlsm {

/// Which regularisation terms get the scale-mixture treatment.  Tlsm applies
/// it to the low-rank and both difference priors; TlsmTnn only to the
/// low-rank term; TlsmUtv only to the difference terms (the remaining term
/// falls back to plain soft-thresholding).
enum class SolverMode { Tlsm, TlsmTnn, TlsmUtv };

std::string to_string(SolverMode m);
SolverMode parse_mode(std::string_view s); // throws on unknown name

struct SolverConfig {
    double a = 4.0;   // balancing factor of the low-rank split
    double b = 0.2;   // balancing factor of the mode-2 difference split
    double c = 1.0;   // balancing factor of the mode-1 difference split
    double tau = 0.5; // low-rank penalty weight
    double lambda1 = 0.05; // mode-2 (smoothness) penalty weight
    double lambda2 = 1.0;  // mode-1 (footprint direction) penalty weight
    int max_iters = 20;
    double epsilon = 1e-6;
    SolverMode mode = SolverMode::Tlsm;
    double rel_tol = 0.0; // 0 disables early stopping

    void validate() const; // throws std::invalid_argument

    bool operator==(const SolverConfig&) const = default;
};

struct IterationRecord {
    int iter = 0;
    double res_z = 0.0;  // ||Z - X||_F
    double res_d1 = 0.0; // ||D1 - grad1(X - Y)||_F
    double res_d2 = 0.0; // ||D2 - grad2(X)||_F
    std::optional<double> psnr_db; // vs reference, when given
    std::optional<double> ssim;
};

/// All ADMM variables of one run.  Primal X, Z, D1, D2 and duals B, B1, B2
/// share the observation's dimensions.
struct SolverState {
    Tensor3 x, z, d1, d2;
    Tensor3 bb, b1, b2;
    int iter = 0;
    std::vector<IterationRecord> history;
};

struct DenoiseResult {
    Tensor3 x;
    std::vector<IterationRecord> history;
};

/// Closed-form X update: per frontal slice, the linear system
/// (1 + a + b grad2'grad2 + c grad1'grad1) X = a(Z-B) + b grad2'(D2-B2)
/// + c grad1'(D1 + grad1 Y - B1) + Y, solved by pointwise division in the
/// 2-D frequency domain where the circular differences are diagonal.
Tensor3 update_x(const SolverState& state, const Tensor3& y, const SolverConfig& cfg);

/// Z update: t-SVD of L = X + B, shrink the per-frequency singular values
/// (scale-mixture or plain soft-threshold tau/a depending on mode, clamped
/// at zero), reconstruct.
Tensor3 update_z(const SolverState& state, const SolverConfig& cfg);

/// D1 update: shrink K1 = grad1(X - Y) + B1 (penalty lambda2, quad weight c).
Tensor3 update_d1(const SolverState& state, const Tensor3& y, const SolverConfig& cfg);

/// D2 update: shrink H2 = grad2(X) + B2 (penalty lambda1, quad weight b).
Tensor3 update_d2(const SolverState& state, const SolverConfig& cfg);

/// B  <- B  - (Z - X);  B1 <- B1 - (D1 - grad1(X-Y));  B2 <- B2 - (D2 - grad2 X).
void update_multipliers(SolverState& state, const Tensor3& y);

/// Run the full ADMM loop on the observation y.  Records per-iteration
/// residuals, and PSNR/SSIM when a reference is given.  Throws if an
/// intermediate goes non-finite (message carries the iteration index).
DenoiseResult denoise(const Tensor3& y, const SolverConfig& cfg,
                      const Tensor3* reference = nullptr);

} // namespace tlsm

#endif
