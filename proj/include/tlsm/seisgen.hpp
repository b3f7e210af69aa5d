#ifndef TLSM_SEISGEN_HPP
#define TLSM_SEISGEN_HPP

#include "tlsm/tensor.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace tlsm {

/// One linear event: arrival time at trace (i1, i2) is
/// intercept_time + dip_inline * i1 + dip_crossline * i2 (seconds).
struct EventSpec {
    double intercept_time = 0.0;  // s
    double dip_inline = 0.0;      // s per inline trace
    double dip_crossline = 0.0;   // s per crossline trace
    double amplitude = 1.0;

    bool operator==(const EventSpec&) const = default;
};

/// One experimental noise condition.
struct NoiseSpec {
    double footprint_amplitude = 0.2; // F, in [0, 1]
    double gaussian_sigma = 0.02;     // sigma >= 0
    std::uint64_t seed = 7;
    std::size_t footprint_period = 4; // stripe spacing, traces
    double footprint_decay = 32.0;    // time constant, samples

    bool operator==(const NoiseSpec&) const = default;
};

/// Zero-phase Ricker wavelet (1 - 2 pi^2 f^2 t^2) exp(-pi^2 f^2 t^2).
double ricker(double peak_freq, double t);

/// Three crossing events that intersect pairwise inside a 40 x 64 grid with
/// a 256 ms record; reasonable defaults for larger volumes too.
std::vector<EventSpec> default_events();

/// Superpose Ricker wavelets along each event's linear moveout, then scale
/// so max |entry| = 1 (skipped for the all-zero tensor).  Dims are
/// (inline, crossline, time).
Tensor3 generate_clean(const std::array<std::size_t, 3>& dims,
                       const std::vector<EventSpec>& events,
                       double dt, double peak_freq);

struct NoisyData {
    Tensor3 y; // x + f + n
    Tensor3 f; // footprint
    Tensor3 n; // Gaussian
};

/// Footprint: stripes along the inline axis — traces with
/// i2 % period == 0 carry amplitude F * exp(-k / footprint_decay) at time
/// sample k, zero elsewhere.  Gaussian entries are drawn in canonical layout
/// order from mt19937_64 seeded with spec.seed through a Box-Muller
/// transform (see the implementation note for the exact stream).
NoisyData add_noise(const Tensor3& x, const NoiseSpec& spec);

} // namespace tlsm

#endif
