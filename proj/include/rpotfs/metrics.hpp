#pragma once

#include "rpotfs/radar_map.hpp"

#include <span>
#include <vector>

namespace rpotfs {

struct Peak {
    std::size_t row = 0;
    std::size_t col = 0;
    long delay_bin = 0;    // samples, from the map's delay axis
    long doppler_bin = 0;  // signed
    double level_db = 0.0;

    bool operator==(const Peak&) const = default;
};

// Guards are half-widths: the default 1 x 2 excludes a 3 x 5 (delay x Doppler)
// rectangle around each peak.
struct PeakOptions {
    std::size_t guard_delay = 1;
    std::size_t guard_doppler = 2;
    std::size_t max_peaks = 5;
    double min_separation_db = 30.0;  // stop once a candidate is this far below the top peak
};

struct PeakReport {
    std::vector<Peak> peaks;   // descending level
    double floor_rms_db = 0.0;
    double output_snr_db = 0.0;  // 0 dB peak minus floor
};

// Greedy extraction: repeatedly take the largest remaining local maximum
// (>= its 8 neighbours, non-zero), then exclude its guard rectangle. Ties go to
// the lower delay row, then the lower Doppler column.
std::vector<Peak> find_peaks(const RadarMap& map, const PeakOptions& opt);

// RMS of the linear magnitudes outside the guard rectangles of `excluded`,
// in dB relative to the 0 dB peak. Returns -inf if every remaining cell is zero.
double noise_floor_rms_db(const RadarMap& map, std::span<const Peak> excluded,
                          std::size_t guard_delay, std::size_t guard_doppler);

PeakReport analyze_map(const RadarMap& map, const PeakOptions& opt);

}  // namespace rpotfs
