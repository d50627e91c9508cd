#include "rpotfs/radar_pilot.hpp"

#include "rpotfs/fft.hpp"

#include <cmath>

namespace rpotfs {

CirMatrix estimate_cir_rp(const SampleStream& rx, const TxRecord& tx) {
    const auto* rp = std::get_if<RpPilot>(&tx.scheme);
    if (rp == nullptr) throw std::invalid_argument("estimate_cir_rp: capture does not use an RP pilot");
    const GridConfig& cfg = tx.grid;
    const std::size_t P = rp->sym_len;
    const std::size_t columns = cfg.N * tx.frames;
    if (rx.size() < columns * cfg.M)
        throw std::invalid_argument("estimate_cir_rp: received stream shorter than the capture");

    std::vector<cd> pilot_spectrum(tx.rp_pilot.begin() + static_cast<std::ptrdiff_t>(rp->cp_len),
                                   tx.rp_pilot.end());
    fft::forward(pilot_spectrum);
    for (const auto& v : pilot_spectrum)
        if (std::abs(v) < 1e-12) throw std::logic_error("estimate_cir_rp: pilot spectrum has a zero");

    CirMatrix cir{CMatrix(P, columns), static_cast<double>(cfg.M) / cfg.fs, 1.0 / cfg.fs};
    std::vector<cd> buf(P);
    for (std::size_t col = 0; col < columns; ++col) {
        const std::size_t start = col * cfg.M + rp->cp_len;
        for (std::size_t i = 0; i < P; ++i) buf[i] = rx.samples[start + i];
        fft::forward(buf);
        for (std::size_t i = 0; i < P; ++i) buf[i] /= pilot_spectrum[i];
        fft::inverse(buf);
        for (std::size_t i = 0; i < P; ++i) cir.taps(i, col) = buf[i];
    }
    return cir;
}

CMatrix estimate_cir_zp(const TTMatrix& rx, const GridConfig& cfg, const ZpPilot& scheme,
                        double threshold_db) {
    validate_scheme(scheme, cfg);
    if (std::abs(scheme.pulse_amplitude) == 0.0)
        throw std::invalid_argument("estimate_cir_zp: zero pulse amplitude");
    const DDMatrix dd = zak(rx, cfg);

    double peak = 0.0;
    for (std::size_t r = 0; r < scheme.zone_rows; ++r)
        for (std::size_t c = 0; c < cfg.N; ++c) peak = std::max(peak, std::abs(dd(r, c)));
    const double cut = std::isinf(threshold_db) && threshold_db < 0
                           ? -1.0
                           : peak * std::pow(10.0, threshold_db / 20.0);

    CMatrix h(scheme.zone_rows, cfg.N);
    for (std::size_t r = 0; r < scheme.zone_rows; ++r)
        for (std::size_t c = 0; c < cfg.N; ++c)
            h(r, c) = std::abs(dd(r, c)) < cut ? cd{} : dd(r, c) / scheme.pulse_amplitude;
    return h;
}

RadarMap cir_to_dd_map(const CirMatrix& cir, std::size_t zero_pad, SlowTimeWindow window) {
    if (cir.taps.empty()) throw std::invalid_argument("cir_to_dd_map: empty CIR");
    if (!(cir.column_period_s > 0.0))
        throw std::invalid_argument("cir_to_dd_map: column period must be positive");
    const std::size_t cols = cir.taps.cols();
    const std::size_t len = cols + zero_pad;

    RMatrix mag(cir.taps.rows(), len);
    std::vector<cd> row(len);
    for (std::size_t r = 0; r < cir.taps.rows(); ++r) {
        std::fill(row.begin(), row.end(), cd{});
        for (std::size_t c = 0; c < cols; ++c) row[c] = cir.taps(r, c) * window_value(window, c, cols);
        fft::forward(row);
        fft::shift(row);
        for (std::size_t c = 0; c < len; ++c) mag(r, c) = std::abs(row[c]);
    }
    return normalized_map(std::move(mag), 0, -static_cast<long>(len / 2), cir.tap_period_s,
                          1.0 / (cir.column_period_s * static_cast<double>(len)), "pilot");
}

}  // namespace rpotfs
