#include "rpotfs/metrics.hpp"

#include <doctest.h>

#include <cmath>

using namespace rpotfs;

namespace {

RadarMap map_from(RMatrix raw) { return normalized_map(std::move(raw), 0, -4, 1.0, 1.0, "test"); }

}  // namespace

TEST_CASE("normalized_map puts the peak at exactly 0 dB") {
    RMatrix raw(3, 8, 0.5);
    raw(1, 2) = -4.0;
    const RadarMap m = map_from(raw);
    CHECK(m.magnitude(1, 2) == 1.0);
    CHECK(m.db(1, 2) == 0.0);
    CHECK(m.db(0, 0) == doctest::Approx(20.0 * std::log10(0.125)));
    CHECK_THROWS_AS(map_from(RMatrix(2, 2)), std::invalid_argument);
    CHECK_THROWS_AS(map_from(RMatrix{}), std::invalid_argument);
}

TEST_CASE("single impulse gives exactly one peak") {
    RMatrix raw(6, 10);
    raw(4, 7) = 3.0;
    const RadarMap m = map_from(raw);
    const auto peaks = find_peaks(m, PeakOptions{1, 2, 10, 300.0});
    REQUIRE(peaks.size() == 1);
    CHECK(peaks[0].row == 4);
    CHECK(peaks[0].col == 7);
    CHECK(peaks[0].delay_bin == 4);
    CHECK(peaks[0].doppler_bin == 3);
    CHECK(peaks[0].level_db == 0.0);
}

TEST_CASE("equal maxima: lower delay first, then lower Doppler") {
    RMatrix raw(8, 16, 0.01);
    raw(5, 3) = 1.0;
    raw(2, 12) = 1.0;
    raw(2, 6) = 1.0;
    const auto peaks = find_peaks(map_from(raw), PeakOptions{1, 2, 3, 300.0});
    REQUIRE(peaks.size() == 3);
    CHECK(peaks[0].row == 2);
    CHECK(peaks[0].col == 6);
    CHECK(peaks[1].row == 2);
    CHECK(peaks[1].col == 12);
    CHECK(peaks[2].row == 5);
}

TEST_CASE("peaks come out in descending level and respect the separation limit") {
    RMatrix raw(8, 32, 1e-4);
    raw(1, 4) = 1.0;
    raw(6, 20) = 0.1;   // -20 dB
    raw(3, 28) = 0.01;  // -40 dB
    const RadarMap m = map_from(raw);
    const auto all = find_peaks(m, PeakOptions{1, 2, 10, 45.0});
    REQUIRE(all.size() == 3);
    CHECK(all[0].level_db > all[1].level_db);
    CHECK(all[1].level_db > all[2].level_db);
    CHECK(find_peaks(m, PeakOptions{1, 2, 10, 30.0}).size() == 2);
    CHECK(find_peaks(m, PeakOptions{1, 2, 1, 300.0}).size() == 1);
}

TEST_CASE("a monotone skirt around a peak is not a second peak") {
    RMatrix raw(3, 64, 0.0);
    for (std::size_t c = 0; c < 64; ++c) raw(1, c) = 1.0 / (1.0 + std::abs(static_cast<double>(c) - 20.0));
    const auto peaks = find_peaks(map_from(raw), PeakOptions{1, 2, 10, 300.0});
    CHECK(peaks.size() == 1);
}

TEST_CASE("noise floor") {
    SUBCASE("peak over exact zeros underflows to -inf") {
        RMatrix raw(5, 9);
        raw(2, 4) = 1.0;
        const RadarMap m = map_from(raw);
        const auto rep = analyze_map(m, PeakOptions{});
        CHECK(std::isinf(rep.floor_rms_db));
        CHECK(rep.floor_rms_db < 0);
    }
    SUBCASE("RMS of the remaining cells") {
        RMatrix raw(4, 8, 0.1);
        raw(0, 0) = 1.0;
        const RadarMap m = map_from(raw);
        const auto peaks = find_peaks(m, PeakOptions{1, 2, 1, 300.0});
        CHECK(noise_floor_rms_db(m, peaks, 1, 2) == doctest::Approx(-20.0));
        CHECK(noise_floor_rms_db(m, {}, 0, 0) ==
              doctest::Approx(10.0 * std::log10((1.0 + 31 * 0.01) / 32.0)));
    }
    SUBCASE("everything excluded") {
        RMatrix raw(3, 5, 0.1);
        raw(1, 2) = 1.0;
        const RadarMap m = map_from(raw);
        const auto peaks = find_peaks(m, PeakOptions{1, 2, 1, 300.0});
        CHECK_THROWS_AS(noise_floor_rms_db(m, peaks, 1, 2), std::invalid_argument);
    }
}

TEST_CASE("floor is invariant to scaling the underlying map") {
    RMatrix raw(6, 20);
    for (std::size_t i = 0; i < raw.size(); ++i) raw.data()[i] = 0.01 * static_cast<double>((i * 37) % 11);
    raw(3, 10) = 5.0;
    RMatrix scaled = raw;
    for (double& v : scaled.data()) v *= 1234.5;
    const auto a = analyze_map(map_from(raw), PeakOptions{});
    const auto b = analyze_map(map_from(scaled), PeakOptions{});
    CHECK(a.floor_rms_db == doctest::Approx(b.floor_rms_db).epsilon(1e-12));
    CHECK(a.output_snr_db == -a.floor_rms_db);
    CHECK(a.peaks == b.peaks);
}

TEST_CASE("find_peaks preconditions and determinism") {
    RMatrix raw(4, 4, 0.1);
    raw(1, 1) = 1.0;
    const RadarMap m = map_from(raw);
    CHECK_THROWS_AS(find_peaks(m, PeakOptions{4, 1, 1, 10.0}), std::invalid_argument);
    CHECK_THROWS_AS(find_peaks(RadarMap{}, PeakOptions{}), std::invalid_argument);
    CHECK(find_peaks(m, PeakOptions{1, 1, 4, 60.0}) == find_peaks(m, PeakOptions{1, 1, 4, 60.0}));
}

TEST_CASE("crop_doppler keeps the bins around zero and renormalizes") {
    RMatrix raw(2, 10, 0.2);
    raw(0, 0) = 1.0;  // bin -4, dropped by the crop
    raw(1, 5) = 0.5;  // bin +1
    const RadarMap m = map_from(raw);
    const RadarMap c = crop_doppler(m, 4);
    CHECK(c.first_doppler_bin == -2);
    CHECK(c.doppler_bins() == 4);
    CHECK(c.magnitude(1, 3) == 1.0);
    CHECK(c.doppler_bin_of_col(3) == 1);
    CHECK_THROWS_AS(crop_doppler(m, 12), std::invalid_argument);
}
