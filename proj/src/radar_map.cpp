#include "rpotfs/radar_map.hpp"

#include <algorithm>
#include <cmath>

namespace rpotfs {

SlowTimeWindow parse_window(const std::string& name) {
    if (name == "none") return SlowTimeWindow::none;
    if (name == "hann") return SlowTimeWindow::hann;
    throw std::invalid_argument("unknown window '" + name + "' (expected none|hann)");
}

std::string to_string(SlowTimeWindow w) { return w == SlowTimeWindow::hann ? "hann" : "none"; }

double window_value(SlowTimeWindow w, std::size_t i, std::size_t n) {
    if (w == SlowTimeWindow::none || n < 2) return 1.0;
    return 0.5 - 0.5 * std::cos(2.0 * kPi * static_cast<double>(i) / static_cast<double>(n - 1));
}

double RadarMap::db(std::size_t r, std::size_t c) const {
    const double v = magnitude(r, c);
    return v > 0.0 ? std::max(20.0 * std::log10(v), kDbFloor) : kDbFloor;
}

RMatrix RadarMap::to_db() const {
    RMatrix out(magnitude.rows(), magnitude.cols());
    for (std::size_t r = 0; r < out.rows(); ++r)
        for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) = db(r, c);
    return out;
}

RadarMap normalized_map(RMatrix raw, long first_delay, long first_doppler_bin,
                        double delay_step_s, double doppler_step_hz, std::string method) {
    if (raw.empty()) throw std::invalid_argument("radar map: empty");
    double peak = 0.0;
    for (double& v : raw.data()) {
        v = std::abs(v);
        if (!std::isfinite(v)) throw std::invalid_argument("radar map: non-finite magnitude");
        peak = std::max(peak, v);
    }
    if (!(peak > 0.0)) throw std::invalid_argument("radar map: all cells are zero");
    for (double& v : raw.data()) v /= peak;
    return RadarMap{std::move(raw), first_delay, first_doppler_bin, delay_step_s, doppler_step_hz,
                    std::move(method)};
}

RadarMap crop_doppler(const RadarMap& map, std::size_t n_doppler) {
    const long lo = -static_cast<long>(n_doppler / 2);
    const long hi = lo + static_cast<long>(n_doppler);
    const long have_lo = map.first_doppler_bin;
    const long have_hi = have_lo + static_cast<long>(map.doppler_bins());
    if (n_doppler == 0 || lo < have_lo || hi > have_hi)
        throw std::invalid_argument("crop_doppler: requested span exceeds the map");
    RMatrix out(map.delay_bins(), n_doppler);
    const auto offset = static_cast<std::size_t>(lo - have_lo);
    for (std::size_t r = 0; r < out.rows(); ++r)
        for (std::size_t c = 0; c < n_doppler; ++c) out(r, c) = map.magnitude(r, offset + c);
    return normalized_map(std::move(out), map.first_delay, lo, map.delay_step_s,
                          map.doppler_step_hz, map.method);
}

}  // namespace rpotfs
