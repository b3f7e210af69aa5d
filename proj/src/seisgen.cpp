#include "tlsm/seisgen.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>

namespace tlsm {

double ricker(double peak_freq, double t) {
    if (!(peak_freq > 0.0)) throw std::invalid_argument("ricker: peak_freq must be positive");
    const double u = std::numbers::pi * std::numbers::pi * peak_freq * peak_freq * t * t;
    return (1.0 - 2.0 * u) * std::exp(-u);
}

std::vector<EventSpec> default_events() {
    // Three linear events crossing inside the inline-time section, constant
    // along crossline (classic synthetic cube: a 2-D section replicated
    // across the third spatial axis).
    return {
        {0.05, 0.0015, 0.0, 1.0},
        {0.18, -0.0020, 0.0, 0.8},
        {0.10, 0.0010, 0.0, -0.6},
    };
}

Tensor3 generate_clean(const std::array<std::size_t, 3>& dims,
                       const std::vector<EventSpec>& events,
                       double dt, double peak_freq) {
    if (events.empty()) throw std::invalid_argument("generate_clean: no events");
    if (!(dt > 0.0)) throw std::invalid_argument("generate_clean: dt must be positive");
    const auto [n1, n2, n3] = dims;
    Tensor3 x(n1, n2, n3);

    const std::int64_t traces = static_cast<std::int64_t>(n1 * n2);
#pragma omp parallel for
    for (std::int64_t ij = 0; ij < traces; ++ij) {
        const std::size_t i1 = static_cast<std::size_t>(ij) / n2;
        const std::size_t i2 = static_cast<std::size_t>(ij) % n2;
        for (const EventSpec& ev : events) {
            const double t0 = ev.intercept_time +
                              ev.dip_inline * static_cast<double>(i1) +
                              ev.dip_crossline * static_cast<double>(i2);
            for (std::size_t k = 0; k < n3; ++k)
                x(i1, i2, k) += ev.amplitude * ricker(peak_freq, static_cast<double>(k) * dt - t0);
        }
    }

    const double m = max_abs(x);
    if (m > 0.0)
        for (double& v : x.data()) v /= m;
    return x;
}

NoisyData add_noise(const Tensor3& x, const NoiseSpec& spec) {
    if (spec.footprint_amplitude < 0.0 || spec.footprint_amplitude > 1.0)
        throw std::invalid_argument("add_noise: footprint amplitude must be in [0, 1]");
    if (spec.gaussian_sigma < 0.0)
        throw std::invalid_argument("add_noise: sigma must be nonnegative");
    if (spec.footprint_period == 0 || !(spec.footprint_decay > 0.0))
        throw std::invalid_argument("add_noise: invalid footprint pattern parameters");

    const auto [n1, n2, n3] = x.dims();
    NoisyData out{Tensor3(n1, n2, n3), Tensor3(n1, n2, n3), Tensor3(n1, n2, n3)};

    if (spec.footprint_amplitude > 0.0) {
        // Stripes run along the inline axis with alternating sign: crossline
        // traces at j % period == 0 carry +F, those at j % period == period/2
        // carry -F (period 1 degenerates to all-positive).  Alternation keeps
        // the pattern zero-mean across crossline, the usual look of
        // acquisition striping, and the amplitude decays along time.
        const std::size_t half = spec.footprint_period / 2;
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t j = 0; j < n2; ++j) {
                const std::size_t phase = j % spec.footprint_period;
                double sign = 0.0;
                if (phase == 0) sign = 1.0;
                else if (half > 0 && phase == half) sign = -1.0;
                if (sign == 0.0) continue;
                for (std::size_t k = 0; k < n3; ++k)
                    out.f(i, j, k) = sign * spec.footprint_amplitude *
                                     std::exp(-static_cast<double>(k) / spec.footprint_decay);
            }
    }

    if (spec.gaussian_sigma > 0.0) {
        // Reproducible stream: mt19937_64 words mapped to doubles via
        // u = (word >> 11 + 1) * 2^-53 in (0, 1], consumed pairwise by the
        // Box-Muller transform.  Entry 2m gets sqrt(-2 ln u1) cos(2 pi u2),
        // entry 2m+1 the matching sine.  Filled in canonical layout order.
        std::mt19937_64 gen(spec.seed);
        const auto uniform = [&gen]() {
            return static_cast<double>((gen() >> 11) + 1) * 0x1.0p-53;
        };
        auto& data = out.n.data();
        for (std::size_t idx = 0; idx < data.size(); idx += 2) {
            const double u1 = uniform();
            const double u2 = uniform();
            const double r = std::sqrt(-2.0 * std::log(u1));
            const double ang = 2.0 * std::numbers::pi * u2;
            data[idx] = spec.gaussian_sigma * r * std::cos(ang);
            if (idx + 1 < data.size())
                data[idx + 1] = spec.gaussian_sigma * r * std::sin(ang);
        }
    }

    for (std::size_t idx = 0; idx < out.y.size(); ++idx)
        out.y.data()[idx] = x.data()[idx] + out.f.data()[idx] + out.n.data()[idx];
    return out;
}

} // namespace tlsm
