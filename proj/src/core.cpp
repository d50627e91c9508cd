#include "rpotfs/core.hpp"

#include "rpotfs/fft.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rpotfs {

void GridConfig::validate() const {
    if (M < 2 || N < 2) throw std::invalid_argument("grid: M and N must be at least 2");
    if (!is_power_of_two(M) || !is_power_of_two(N))
        throw std::invalid_argument("grid: M and N must be powers of two");
    if (!(fs > 0.0) || !(fc > 0.0)) throw std::invalid_argument("grid: fs and fc must be positive");
}

namespace {

template <class In>
void check_shape(const In& m, const GridConfig& cfg, const char* what) {
    if (!m.matches(cfg))
        throw std::invalid_argument(std::string(what) + ": matrix is " + std::to_string(m.rows()) +
                                    "x" + std::to_string(m.cols()) + ", grid is " +
                                    std::to_string(cfg.M) + "x" + std::to_string(cfg.N));
}

}  // namespace

TTMatrix inverse_zak(const DDMatrix& dd, const GridConfig& cfg) {
    check_shape(dd, cfg, "inverse_zak");
    TTMatrix tt(dd.values);
    for (std::size_t r = 0; r < tt.rows(); ++r) fft::inverse(tt.values.row(r));
    return tt;
}

DDMatrix zak(const TTMatrix& tt, const GridConfig& cfg) {
    check_shape(tt, cfg, "zak");
    DDMatrix dd(tt.values);
    for (std::size_t r = 0; r < dd.rows(); ++r) fft::forward(dd.values.row(r));
    return dd;
}

// The parameter math also serves design studies with non-power-of-two M
// (e.g. M = 1190), so it only checks what the formulas need.
double max_doppler(const GridConfig& cfg) {
    if (cfg.M < 2 || !(cfg.fs > 0.0)) throw std::invalid_argument("max_doppler: need M >= 2, fs > 0");
    return cfg.fs / (2.0 * static_cast<double>(cfg.M));
}

double doppler_resolution(const GridConfig& cfg, std::size_t frames) {
    if (cfg.M < 2 || cfg.N < 2 || !(cfg.fs > 0.0))
        throw std::invalid_argument("doppler_resolution: need M, N >= 2, fs > 0");
    if (frames < 1) throw std::invalid_argument("doppler_resolution: frames must be >= 1");
    return cfg.fs / (static_cast<double>(cfg.M) * static_cast<double>(cfg.N) *
                     static_cast<double>(frames));
}

SampleStream serialize(std::span<const TTMatrix> frames, const GridConfig& cfg) {
    if (frames.empty()) throw std::invalid_argument("serialize: no frames");
    SampleStream out;
    out.fs = cfg.fs;
    out.samples.reserve(frames.size() * cfg.samples_per_frame());
    for (const auto& f : frames) {
        check_shape(f, cfg, "serialize");
        for (std::size_t n = 0; n < cfg.N; ++n)
            for (std::size_t m = 0; m < cfg.M; ++m) out.samples.push_back(f(m, n));
    }
    return out;
}

std::vector<TTMatrix> deserialize(const SampleStream& stream, const GridConfig& cfg) {
    const std::size_t per_frame = cfg.samples_per_frame();
    if (stream.empty() || stream.size() % per_frame != 0)
        throw std::invalid_argument("deserialize: stream length is not a whole number of frames");
    std::vector<TTMatrix> frames;
    frames.reserve(stream.size() / per_frame);
    auto it = stream.samples.begin();
    for (std::size_t k = 0; k < stream.size() / per_frame; ++k) {
        TTMatrix f(cfg);
        for (std::size_t n = 0; n < cfg.N; ++n)
            for (std::size_t m = 0; m < cfg.M; ++m) f(m, n) = *it++;
        frames.push_back(std::move(f));
    }
    return frames;
}

double two_way_doppler(double velocity_mps, double fc) {
    return 2.0 * velocity_mps * fc / kSpeedOfLight;
}

double velocity_from_doppler(double doppler_hz, double fc) {
    return doppler_hz * kSpeedOfLight / (2.0 * fc);
}

PhysicalPoint bin_to_physical(long delay_bin, long doppler_bin, const GridConfig& cfg,
                              std::size_t frames) {
    const double res = doppler_resolution(cfg, frames);
    const long half_span = static_cast<long>(cfg.N * frames / 2);
    if (delay_bin < 0 || static_cast<std::size_t>(delay_bin) >= cfg.M)
        throw std::out_of_range("bin_to_physical: delay bin outside [0, M)");
    if (doppler_bin < -half_span || doppler_bin >= half_span)
        throw std::out_of_range("bin_to_physical: Doppler bin outside the unambiguous span");
    PhysicalPoint p;
    p.range_m = static_cast<double>(delay_bin) * kSpeedOfLight / (2.0 * cfg.fs);
    const double doppler_hz = static_cast<double>(doppler_bin) * res;
    p.velocity_mps = velocity_from_doppler(doppler_hz, cfg.fc);
    return p;
}

}  // namespace rpotfs
