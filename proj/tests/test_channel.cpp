#include "oracles.hpp"
#include "rpotfs/channel.hpp"

#include <doctest.h>

#include <cmath>

using namespace rpotfs;

namespace {

SampleStream stream_of(std::vector<cd> v, double fs = 20e6) { return SampleStream{std::move(v), fs}; }

ChannelConfig noiseless(std::vector<Target> targets) {
    ChannelConfig ch;
    ch.targets = std::move(targets);
    return ch;
}

}  // namespace

TEST_CASE("two-way Doppler of a target") {
    CHECK(doppler_of(Target{0, 0.0, 1.0}, 4e9) == 0.0);
    // 2 * 139 * 4e9 / c = 3709.23 Hz
    CHECK(doppler_of(Target{0, 139.0, 1.0}, 4e9) == doctest::Approx(3709.23).epsilon(0.005 / 3709.23));
    CHECK(doppler_of(Target{0, 13.9, 1.0}, 4e9) == doctest::Approx(370.9).epsilon(0.05 / 370.9));
    CHECK(doppler_of(Target{0, -139.0, 1.0}, 4e9) < 0.0);
}

TEST_CASE("a stationary unit target is a pure delay") {
    oracle::Lcg lcg(1);
    const auto x = stream_of(lcg.vec(256));
    const SampleStream y = apply_channel(x, noiseless({Target{5, 0.0, 1.0}}));
    for (std::size_t t = 0; t < 5; ++t) CHECK(y.samples[t] == cd{});
    for (std::size_t t = 5; t < 256; ++t) CHECK(y.samples[t] == x.samples[t - 5]);
}

TEST_CASE("channel matches the time-varying FIR oracle") {
    oracle::Lcg lcg(2);
    for (int trial = 0; trial < 4; ++trial) {
        const std::size_t len = trial == 0 ? 1024 : 4096;
        const auto x = stream_of(lcg.vec(len));
        std::vector<Target> targets;
        std::vector<oracle::Echo> echoes;
        for (int i = 0; i < 3; ++i) {
            Target t{static_cast<std::size_t>(lcg.uniform() * 40), (lcg.uniform() - 0.5) * 600.0, lcg.complex()};
            targets.push_back(t);
            echoes.push_back({t.delay_samples, 2.0 * t.velocity_mps * 4e9 / 299792458.0, t.amplitude});
        }
        const SampleStream fast = apply_channel(x, noiseless(targets));
        const auto slow = oracle::channel(x.samples, echoes, 20e6);
        CHECK(oracle::max_abs_diff(fast.samples, slow) <= 1e-9);
    }
}

TEST_CASE("channel is linear in its targets") {
    oracle::Lcg lcg(3);
    const auto x = stream_of(lcg.vec(2048));
    const Target t1{3, 139.0, {0.5, 0.2}}, t2{11, -40.0, {-0.3, 1.0}};
    const auto y1 = apply_channel(x, noiseless({t1}));
    const auto y2 = apply_channel(x, noiseless({t2}));
    const auto y12 = apply_channel(x, noiseless({t1, t2}));
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(std::abs(y12.samples[i] - (y1.samples[i] + y2.samples[i])) < 1e-14);
}

TEST_CASE("a static echo correlates best at its own delay") {
    oracle::Lcg lcg(4);
    const auto x = stream_of(lcg.vec(4096));
    const auto y = apply_channel(x, noiseless({Target{17, 0.0, {0.0, 2.0}}}));
    std::size_t best = 0;
    double best_mag = -1.0;
    for (std::size_t lag = 0; lag < 64; ++lag) {
        cd acc{};
        for (std::size_t t = lag; t < x.size(); ++t) acc += y.samples[t] * std::conj(x.samples[t - lag]);
        if (std::abs(acc) > best_mag) {
            best_mag = std::abs(acc);
            best = lag;
        }
    }
    CHECK(best == 17);
}

TEST_CASE("channel argument errors") {
    CHECK_THROWS_AS(apply_channel(SampleStream{}, noiseless({Target{}})), std::invalid_argument);
    const auto x = stream_of(std::vector<cd>(8, 1.0));
    CHECK_THROWS_AS(apply_channel(x, noiseless({Target{8, 0.0, 1.0}})), std::invalid_argument);

    ChannelConfig empty;
    empty.snr_db = 10.0;
    CHECK_THROWS_AS(apply_channel(x, empty), std::invalid_argument);
}

TEST_CASE("AWGN power follows the requested SNR") {
    oracle::Lcg lcg(5);
    const auto x = stream_of(lcg.vec(1000000));
    const double p = mean_power(x);
    for (double snr : {0.0, 10.0, -20.0}) {
        const auto y = add_awgn(x, snr, 17);
        double noise = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) noise += std::norm(y.samples[i] - x.samples[i]);
        noise /= static_cast<double>(x.size());
        CHECK(noise == doctest::Approx(p / std::pow(10.0, snr / 10.0)).epsilon(0.01));
        CHECK(std::abs(10.0 * std::log10(p / noise) - snr) <= 0.1);
    }
}

TEST_CASE("AWGN: noiseless sentinel, determinism, zero power") {
    oracle::Lcg lcg(6);
    const auto x = stream_of(lcg.vec(1000));
    CHECK(add_awgn(x, kNoiselessSnr, 1) == x);
    CHECK(add_awgn(x, 0.0, 9) == add_awgn(x, 0.0, 9));
    CHECK(add_awgn(x, 0.0, 9) != add_awgn(x, 0.0, 10));
    CHECK_THROWS_AS(add_awgn(stream_of(std::vector<cd>(10)), 0.0, 1), std::invalid_argument);
}

TEST_CASE("complex noise is circular: equal I and Q power, uncorrelated") {
    const auto y = add_noise_power(stream_of(std::vector<cd>(200000)), 2.0, 3);
    double ii = 0.0, qq = 0.0, iq = 0.0;
    for (const auto& v : y.samples) {
        ii += v.real() * v.real();
        qq += v.imag() * v.imag();
        iq += v.real() * v.imag();
    }
    const double n = static_cast<double>(y.size());
    CHECK(ii / n == doctest::Approx(1.0).epsilon(0.02));
    CHECK(qq / n == doctest::Approx(1.0).epsilon(0.02));
    CHECK(std::abs(iq / n) < 0.02);
}
