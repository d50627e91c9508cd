#pragma once

#include "rpotfs/types.hpp"

#include <string>

namespace rpotfs {

inline constexpr double kDbFloor = -300.0;  // stands in for 20 log10(0) in dB views

enum class SlowTimeWindow { none, hann };

SlowTimeWindow parse_window(const std::string& name);
std::string to_string(SlowTimeWindow w);

// Window value at index i of a length-n window.
double window_value(SlowTimeWindow w, std::size_t i, std::size_t n);

// Delay x Doppler magnitude map, normalized so the largest cell is exactly 1
// (0 dB). Row r is delay `first_delay + r` samples; column c is Doppler bin
// `first_doppler_bin + c` (signed, 0 = zero Doppler).
struct RadarMap {
    RMatrix magnitude;
    long first_delay = 0;
    long first_doppler_bin = 0;
    double delay_step_s = 0.0;
    double doppler_step_hz = 0.0;
    std::string method;

    std::size_t delay_bins() const { return magnitude.rows(); }
    std::size_t doppler_bins() const { return magnitude.cols(); }

    long delay_of_row(std::size_t r) const { return first_delay + static_cast<long>(r); }
    long doppler_bin_of_col(std::size_t c) const { return first_doppler_bin + static_cast<long>(c); }
    double doppler_hz_of_col(std::size_t c) const {
        return static_cast<double>(doppler_bin_of_col(c)) * doppler_step_hz;
    }

    double db(std::size_t r, std::size_t c) const;
    RMatrix to_db() const;
};

// Takes absolute values, scales the peak to 1. Throws on an all-zero or
// non-finite input.
RadarMap normalized_map(RMatrix raw_magnitude, long first_delay, long first_doppler_bin,
                        double delay_step_s, double doppler_step_hz, std::string method);

// Keeps the `n_doppler` columns around zero Doppler, bins [-floor(n/2), n - floor(n/2)),
// and renormalizes to the retained peak.
RadarMap crop_doppler(const RadarMap& map, std::size_t n_doppler);

}  // namespace rpotfs
