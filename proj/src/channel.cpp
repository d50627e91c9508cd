#include "rpotfs/channel.hpp"

#include "rpotfs/rng.hpp"

#include <cmath>

namespace rpotfs {

double doppler_of(const Target& target, double fc) {
    return two_way_doppler(target.velocity_mps, fc);
}

double mean_power(const SampleStream& x) {
    if (x.empty()) return 0.0;
    double acc = 0.0;
    for (const auto& v : x.samples) acc += std::norm(v);
    return acc / static_cast<double>(x.size());
}

SampleStream apply_targets(const SampleStream& x, const ChannelConfig& ch) {
    if (x.empty()) throw std::invalid_argument("apply_channel: empty stream");
    SampleStream y;
    y.fs = x.fs;
    y.samples.assign(x.size(), cd{});
    for (const auto& tgt : ch.targets) {
        if (tgt.delay_samples >= x.size())
            throw std::invalid_argument("apply_channel: target delay exceeds the stream length");
        const double f = doppler_of(tgt, ch.fc);
        const double w = 2.0 * kPi * f / ch.fs;
        for (std::size_t t = tgt.delay_samples; t < x.size(); ++t) {
            // Phase from the absolute sample index keeps long captures exact
            // (no accumulated rotation error across frame boundaries).
            const double phase = w * static_cast<double>(t);
            y.samples[t] += tgt.amplitude * x.samples[t - tgt.delay_samples] *
                            cd(std::cos(phase), std::sin(phase));
        }
    }
    return y;
}

SampleStream add_noise_power(const SampleStream& x, double noise_power, std::uint64_t seed) {
    if (!(noise_power >= 0.0)) throw std::invalid_argument("add_noise: negative noise power");
    SampleStream y = x;
    Rng rng(seed);
    const double sigma = std::sqrt(noise_power / 2.0);
    for (auto& v : y.samples) v += rng.complex_gaussian(sigma);
    return y;
}

SampleStream add_awgn(const SampleStream& x, double snr_db, std::uint64_t seed) {
    if (std::isinf(snr_db) && snr_db > 0) return x;
    const double p = mean_power(x);
    if (!(p > 0.0)) throw std::invalid_argument("add_awgn: input has zero power");
    return add_noise_power(x, p / std::pow(10.0, snr_db / 10.0), seed);
}

SampleStream apply_channel(const SampleStream& x, const ChannelConfig& ch) {
    SampleStream y = apply_targets(x, ch);
    return add_awgn(y, ch.snr_db, ch.noise_seed);
}

}  // namespace rpotfs
