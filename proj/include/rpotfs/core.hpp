#pragma once

#include "rpotfs/types.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace rpotfs {

// Delay-Doppler grid geometry plus the radio constants needed to label it.
struct GridConfig {
    std::size_t M = 64;    // delay / fast-time bins
    std::size_t N = 256;   // Doppler / slow-time bins per frame
    double fs = 20e6;      // sampling rate, Hz
    double fc = 4e9;       // carrier, Hz

    // Throws std::invalid_argument unless M, N are powers of two >= 2 and fs, fc > 0.
    void validate() const;

    std::size_t samples_per_frame() const { return M * N; }
    double frame_duration_s() const { return static_cast<double>(M * N) / fs; }

    bool operator==(const GridConfig&) const = default;
};

namespace detail {
struct DelayDopplerTag {};
struct FastSlowTimeTag {};
}  // namespace detail

// M x N complex grid tagged with the domain it lives in, so a delay-Doppler
// matrix cannot be passed where a fast/slow-time matrix is expected.
template <class Domain>
struct GridMatrix {
    CMatrix values;

    GridMatrix() = default;
    explicit GridMatrix(const GridConfig& cfg) : values(cfg.M, cfg.N) {}
    explicit GridMatrix(CMatrix m) : values(std::move(m)) {}

    std::size_t rows() const { return values.rows(); }
    std::size_t cols() const { return values.cols(); }
    cd& operator()(std::size_t r, std::size_t c) { return values(r, c); }
    const cd& operator()(std::size_t r, std::size_t c) const { return values(r, c); }

    bool matches(const GridConfig& cfg) const { return rows() == cfg.M && cols() == cfg.N; }
    bool operator==(const GridMatrix&) const = default;
};

using DDMatrix = GridMatrix<detail::DelayDopplerTag>;
using TTMatrix = GridMatrix<detail::FastSlowTimeTag>;

struct SampleStream {
    std::vector<cd> samples;
    double fs = 0.0;

    std::size_t size() const { return samples.size(); }
    bool empty() const { return samples.empty(); }
    bool operator==(const SampleStream&) const = default;
};

// Row-wise length-N inverse DFT (1/N normalization). Rows never mix.
TTMatrix inverse_zak(const DDMatrix& dd, const GridConfig& cfg);

// Row-wise unnormalized forward DFT; exact inverse of inverse_zak.
DDMatrix zak(const TTMatrix& tt, const GridConfig& cfg);

// Largest unambiguous Doppler shift, fs / (2M).
double max_doppler(const GridConfig& cfg);

// Doppler bin width for a coherent capture of `frames` frames, fs / (M N frames).
double doppler_resolution(const GridConfig& cfg, std::size_t frames);

// Frames are emitted in order; inside a frame, column by column (slow time n =
// 0..N-1), each column contributing its M fast-time samples contiguously.
SampleStream serialize(std::span<const TTMatrix> frames, const GridConfig& cfg);
std::vector<TTMatrix> deserialize(const SampleStream& stream, const GridConfig& cfg);

struct PhysicalPoint {
    double range_m = 0.0;
    double velocity_mps = 0.0;
};

// Monostatic (two-way) conversion of a map cell to range and radial velocity.
// `doppler_bin` is signed, 0 = zero Doppler. `frames` sets the Doppler bin width.
PhysicalPoint bin_to_physical(long delay_bin, long doppler_bin, const GridConfig& cfg,
                              std::size_t frames);

// Two-way Doppler shift of a reflector moving at `velocity_mps` (positive = closing),
// and its inverse. The monostatic factor 2 lives only in these two functions.
double two_way_doppler(double velocity_mps, double fc);
double velocity_from_doppler(double doppler_hz, double fc);

}  // namespace rpotfs
