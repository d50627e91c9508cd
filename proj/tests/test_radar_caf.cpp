#include "oracles.hpp"
#include "rpotfs/channel.hpp"
#include "rpotfs/metrics.hpp"
#include "rpotfs/modem.hpp"
#include "rpotfs/radar_caf.hpp"

#include <doctest.h>

#include <cmath>

using namespace rpotfs;

namespace {

SampleStream stream_of(std::vector<cd> v, double fs = 20e6) { return SampleStream{std::move(v), fs}; }

double max_rel_error(const CMatrix& fast, const CMatrix& slow) {
    return oracle::max_abs_diff(fast.data(), slow.data()) / oracle::max_abs(slow.data());
}

std::pair<std::size_t, std::size_t> argmax(const CMatrix& m) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < m.size(); ++i)
        if (std::abs(m.data()[i]) > std::abs(m.data()[best])) best = i;
    return {best / m.cols(), best % m.cols()};
}

}  // namespace

TEST_CASE("autocorrelation peaks at zero delay and zero Doppler") {
    oracle::Lcg lcg(1);
    const auto x = stream_of(lcg.vec(2048));
    const RadarMap map = compute_caf(x, x, CafOptions{0, 16, 64, SlowTimeWindow::none});
    const auto peaks = find_peaks(map, PeakOptions{1, 2, 1, 30.0});
    REQUIRE(peaks.size() == 1);
    CHECK(peaks[0].delay_bin == 0);
    CHECK(peaks[0].doppler_bin == 0);
    CHECK(peaks[0].level_db == 0.0);
    CHECK(map.method == "caf");
}

TEST_CASE("fast CAF equals the direct double sum") {
    oracle::Lcg lcg(2);
    struct Case {
        std::size_t len;
        long first_delay;
        std::size_t n_delay, n_doppler;
        bool hann;
    };
    for (const Case& c : {Case{512, 0, 8, 32, false}, Case{1000, -5, 12, 21, true},
                          Case{8192, -3, 6, 16, false}}) {
        const auto ref = stream_of(lcg.vec(c.len));
        const auto srv = stream_of(lcg.vec(c.len));
        const CafOptions opt{c.first_delay, c.n_delay, c.n_doppler,
                             c.hann ? SlowTimeWindow::hann : SlowTimeWindow::none};
        const CMatrix fast = caf_surface(ref, srv, opt);
        const CMatrix slow = oracle::caf_direct(ref.samples, srv.samples, c.first_delay, c.n_delay,
                                                c.n_doppler, c.hann);
        CHECK(max_rel_error(fast, slow) <= 1e-6);
    }
}

TEST_CASE("delayed, Doppler-shifted echo peaks where the direct sum peaks") {
    oracle::Lcg lcg(3);
    const std::size_t T = 8192;
    const auto ref = stream_of(lcg.vec(T));
    ChannelConfig ch;
    ch.targets = {Target{7, 139.0, 1.0}};
    const auto srv = apply_channel(ref, ch);
    const CafOptions opt{0, 12, 16, SlowTimeWindow::none};

    const CMatrix slow = oracle::caf_direct(ref.samples, srv.samples, 0, 12, 16, false);
    const auto [r, c] = argmax(slow);
    CHECK(r == 7);
    // 3709.2 Hz on a 20e6 / 8192 = 2441 Hz grid: nearest bin is +2 (column 8 + 2)
    CHECK(static_cast<long>(c) - 8 == std::lround(doppler_of(ch.targets[0], 4e9) / (20e6 / T)));

    const RadarMap map = compute_caf(ref, srv, opt);
    const auto peaks = find_peaks(map, PeakOptions{1, 2, 1, 30.0});
    REQUIRE(!peaks.empty());
    CHECK(peaks[0].row == r);
    CHECK(peaks[0].col == c);
    CHECK(map.doppler_step_hz == 20e6 / T);
}

TEST_CASE("CAF magnitude ignores a global phase on the surveillance signal") {
    oracle::Lcg lcg(4);
    const auto ref = stream_of(lcg.vec(1024));
    auto srv = stream_of(lcg.vec(1024));
    const RadarMap a = compute_caf(ref, srv, CafOptions{-2, 6, 16, SlowTimeWindow::none});
    for (auto& v : srv.samples) v *= std::polar(1.0, 1.234);
    const RadarMap b = compute_caf(ref, srv, CafOptions{-2, 6, 16, SlowTimeWindow::none});
    for (std::size_t i = 0; i < a.magnitude.size(); ++i)
        CHECK(a.magnitude.data()[i] == doctest::Approx(b.magnitude.data()[i]).epsilon(1e-9));
}

TEST_CASE("CAF argument errors") {
    const auto a = stream_of(std::vector<cd>(64, 1.0));
    const auto b = stream_of(std::vector<cd>(63, 1.0));
    CHECK_THROWS_AS(caf_surface(a, b, CafOptions{0, 4, 8}), std::invalid_argument);
    CHECK_THROWS_AS(caf_surface(a, a, CafOptions{0, 4, 65}), std::invalid_argument);
    CHECK_THROWS_AS(caf_surface(SampleStream{}, SampleStream{}, CafOptions{}), std::invalid_argument);
}

TEST_CASE("RP capture: repeated pilot gives lower ghost peaks at +-P") {
    GridConfig cfg;
    cfg.M = 64;
    cfg.N = 32;
    const std::size_t P = 8;
    const TxRecord tx = build_capture(cfg, RpPilot{P, P, 9}, 4, 5);
    ChannelConfig ch;
    ch.targets = {Target{4, 139.0, 1.0}};
    const auto rx = apply_channel(tx.stream, ch);
    const RadarMap map = compute_caf(tx.stream, rx, CafOptions{-16, 48, 64, SlowTimeWindow::none});
    const auto peaks = find_peaks(map, PeakOptions{1, 2, 3, 30.0});
    REQUIRE(peaks.size() == 3);
    CHECK(peaks[0].delay_bin == 4);
    bool minus = false, plus = false;
    for (std::size_t i = 1; i < 3; ++i) {
        CHECK(peaks[i].level_db < 0.0);
        CHECK(peaks[i].doppler_bin == peaks[0].doppler_bin);
        minus |= peaks[i].delay_bin == 4 - static_cast<long>(P);
        plus |= peaks[i].delay_bin == 4 + static_cast<long>(P);
    }
    CHECK(minus);
    CHECK(plus);
}
