#include "rpotfs/metrics.hpp"

#include <cmath>
#include <limits>

namespace rpotfs {
namespace {

void mark_guard(std::vector<char>& excluded, const RadarMap& map, std::size_t row, std::size_t col,
                std::size_t gd, std::size_t gk) {
    const std::size_t rows = map.delay_bins();
    const std::size_t cols = map.doppler_bins();
    const std::size_t r0 = row >= gd ? row - gd : 0;
    const std::size_t r1 = std::min(rows - 1, row + gd);
    const std::size_t c0 = col >= gk ? col - gk : 0;
    const std::size_t c1 = std::min(cols - 1, col + gk);
    for (std::size_t r = r0; r <= r1; ++r)
        for (std::size_t c = c0; c <= c1; ++c) excluded[r * cols + c] = 1;
}

bool is_local_max(const RadarMap& map, std::size_t row, std::size_t col) {
    const double v = map.magnitude(row, col);
    if (!(v > 0.0)) return false;
    const std::size_t rows = map.delay_bins();
    const std::size_t cols = map.doppler_bins();
    for (std::size_t r = row > 0 ? row - 1 : 0; r <= std::min(rows - 1, row + 1); ++r)
        for (std::size_t c = col > 0 ? col - 1 : 0; c <= std::min(cols - 1, col + 1); ++c)
            if (map.magnitude(r, c) > v) return false;
    return true;
}

}  // namespace

std::vector<Peak> find_peaks(const RadarMap& map, const PeakOptions& opt) {
    if (map.magnitude.empty()) throw std::invalid_argument("find_peaks: empty map");
    if (opt.guard_delay >= map.delay_bins() || opt.guard_doppler >= map.doppler_bins())
        throw std::invalid_argument("find_peaks: guard larger than the map");

    const std::size_t rows = map.delay_bins();
    const std::size_t cols = map.doppler_bins();
    std::vector<char> local_max(rows * cols, 0);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) local_max[r * cols + c] = is_local_max(map, r, c);

    std::vector<char> excluded(rows * cols, 0);
    std::vector<Peak> peaks;
    while (peaks.size() < opt.max_peaks) {
        double best = 0.0;
        std::size_t best_idx = rows * cols;
        for (std::size_t i = 0; i < rows * cols; ++i) {
            if (excluded[i] || !local_max[i]) continue;
            if (map.magnitude.data()[i] > best) {
                best = map.magnitude.data()[i];
                best_idx = i;
            }
        }
        if (best_idx == rows * cols) break;
        const std::size_t r = best_idx / cols;
        const std::size_t c = best_idx % cols;
        const double level = map.db(r, c);
        if (!peaks.empty() && level < peaks.front().level_db - opt.min_separation_db) break;
        peaks.push_back(Peak{r, c, map.delay_of_row(r), map.doppler_bin_of_col(c), level});
        mark_guard(excluded, map, r, c, opt.guard_delay, opt.guard_doppler);
    }
    return peaks;
}

double noise_floor_rms_db(const RadarMap& map, std::span<const Peak> excluded_peaks,
                          std::size_t guard_delay, std::size_t guard_doppler) {
    if (map.magnitude.empty()) throw std::invalid_argument("noise floor: empty map");
    std::vector<char> excluded(map.magnitude.size(), 0);
    for (const auto& p : excluded_peaks)
        mark_guard(excluded, map, p.row, p.col, guard_delay, guard_doppler);

    double acc = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < excluded.size(); ++i) {
        if (excluded[i]) continue;
        const double v = map.magnitude.data()[i];
        acc += v * v;
        ++count;
    }
    if (count == 0) throw std::invalid_argument("noise floor: every cell is excluded");
    if (acc == 0.0) return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(acc / static_cast<double>(count));
}

PeakReport analyze_map(const RadarMap& map, const PeakOptions& opt) {
    PeakReport rep;
    rep.peaks = find_peaks(map, opt);
    rep.floor_rms_db = noise_floor_rms_db(map, rep.peaks, opt.guard_delay, opt.guard_doppler);
    rep.output_snr_db = -rep.floor_rms_db;
    return rep;
}

}  // namespace rpotfs
