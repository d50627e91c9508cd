#pragma once

#include "rpotfs/core.hpp"
#include "rpotfs/radar_map.hpp"

namespace rpotfs {

// Delay window [first_delay, first_delay + n_delay) in samples (negative delays
// allowed so features on both sides of a short-range echo stay visible) and a
// Doppler grid of n_doppler bins of width fs / T, bins [-floor(n/2), n - floor(n/2)).
struct CafOptions {
    long first_delay = 0;
    std::size_t n_delay = 64;
    std::size_t n_doppler = 1024;
    SlowTimeWindow window = SlowTimeWindow::none;
};

// Complex cross-ambiguity surface
//   A(d, k) = sum_t w[t] srv[t] conj(ref[t - d]) exp(-j 2 pi k t / T),
// with ref taken as zero outside [0, T). Rows follow the delay window, columns
// the Doppler grid. Each delay row is one length-T FFT of the lag product, so the
// result is exact rather than a block approximation.
CMatrix caf_surface(const SampleStream& ref, const SampleStream& srv, const CafOptions& opt);

// |caf_surface| normalized to a 0 dB peak, with axes attached.
RadarMap compute_caf(const SampleStream& ref, const SampleStream& srv, const CafOptions& opt);

}  // namespace rpotfs
