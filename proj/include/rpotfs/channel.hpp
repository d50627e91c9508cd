#pragma once

#include "rpotfs/core.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace rpotfs {

// One point reflector, seen as a delayed, Doppler-shifted, scaled echo.
struct Target {
    std::size_t delay_samples = 0;
    double velocity_mps = 0.0;  // radial, positive = closing
    cd amplitude{1.0, 0.0};

    bool operator==(const Target&) const = default;
};

// Use this as snr_db to disable noise altogether.
inline constexpr double kNoiselessSnr = std::numeric_limits<double>::infinity();

struct ChannelConfig {
    std::vector<Target> targets;
    double snr_db = kNoiselessSnr;
    std::uint64_t noise_seed = 0;
    double fc = 4e9;
    double fs = 20e6;
};

double doppler_of(const Target& target, double fc);

// Sum of echoes y[t] = sum_i a_i x[t - d_i] exp(j 2 pi f_i t / fs), t counted from
// the first sample of the capture, followed by AWGN at the requested SNR
// relative to the mean power of the noiseless echo sum.
SampleStream apply_channel(const SampleStream& x, const ChannelConfig& ch);

// Noiseless echo sum only.
SampleStream apply_targets(const SampleStream& x, const ChannelConfig& ch);

// Adds complex white Gaussian noise with power mean|x|^2 / 10^(snr_db/10).
// snr_db = +inf returns x unchanged. Zero-power input throws.
SampleStream add_awgn(const SampleStream& x, double snr_db, std::uint64_t seed);

// Adds complex white Gaussian noise with an explicit total power E|w|^2.
SampleStream add_noise_power(const SampleStream& x, double noise_power, std::uint64_t seed);

double mean_power(const SampleStream& x);

}  // namespace rpotfs
