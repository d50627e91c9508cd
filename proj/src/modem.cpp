#include "rpotfs/modem.hpp"

#include "rpotfs/fft.hpp"
#include "rpotfs/rng.hpp"

#include <cmath>
#include <string>

namespace rpotfs {

std::size_t pilot_zone_rows(const PilotScheme& scheme) {
    return std::visit([](const auto& s) -> std::size_t {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, RpPilot>) return s.zone_rows();
        else return s.zone_rows;
    }, scheme);
}

void validate_scheme(const PilotScheme& scheme, const GridConfig& cfg) {
    cfg.validate();
    if (const auto* rp = std::get_if<RpPilot>(&scheme)) {
        if (!is_power_of_two(rp->sym_len))
            throw std::invalid_argument("rp pilot: symbol length must be a power of two");
        if (rp->cp_len != rp->sym_len)
            throw std::invalid_argument("rp pilot: cyclic prefix must equal the symbol length");
        if (2 * rp->sym_len >= cfg.M)
            throw std::invalid_argument("rp pilot: 2P must be smaller than M");
    } else {
        const auto& zp = std::get<ZpPilot>(scheme);
        if (zp.zone_rows == 0 || zp.zone_rows >= cfg.M)
            throw std::invalid_argument("zp pilot: zone rows must be in [1, M)");
        if (zp.pulse_row >= zp.zone_rows)
            throw std::invalid_argument("zp pilot: pulse row outside the pilot zone");
    }
}

FrameLayout FrameLayout::for_scheme(const PilotScheme& scheme, const GridConfig& cfg) {
    const std::size_t L = pilot_zone_rows(scheme);
    return FrameLayout{0, L, L, cfg.M};
}

QamStream map_bits_to_qam(std::span<const std::uint8_t> bits) {
    if (bits.size() % 2 != 0) throw std::invalid_argument("map_bits_to_qam: odd bit count");
    const double a = 1.0 / std::sqrt(2.0);
    QamStream out;
    out.symbols.reserve(bits.size() / 2);
    for (std::size_t i = 0; i < bits.size(); i += 2) {
        const double re = bits[i] ? -a : a;
        const double im = bits[i + 1] ? -a : a;
        out.symbols.emplace_back(re, im);
    }
    return out;
}

QamStream random_qam(std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::uint8_t> bits(2 * count);
    for (auto& b : bits) b = rng.bit() ? 1 : 0;
    QamStream out = map_bits_to_qam(bits);
    out.seed = seed;
    return out;
}

std::vector<cd> gen_rp_pilot(std::size_t sym_len, std::uint64_t pilot_seed) {
    if (!is_power_of_two(sym_len))
        throw std::invalid_argument("gen_rp_pilot: symbol length must be a power of two");
    std::vector<cd> symbol = random_qam(sym_len, pilot_seed).symbols;
    fft::inverse(symbol);
    std::vector<cd> pilot;
    pilot.reserve(2 * sym_len);
    pilot.insert(pilot.end(), symbol.begin(), symbol.end());
    pilot.insert(pilot.end(), symbol.begin(), symbol.end());
    return pilot;
}

namespace {

DDMatrix place_data(const QamStream& data, const GridConfig& cfg, std::size_t first_row) {
    const std::size_t rows = cfg.M - first_row;
    if (data.symbols.size() != rows * cfg.N)
        throw std::invalid_argument("frame: expected " + std::to_string(rows * cfg.N) +
                                    " data symbols, got " + std::to_string(data.symbols.size()));
    DDMatrix dd(cfg);
    std::size_t i = 0;
    for (std::size_t n = 0; n < cfg.N; ++n)
        for (std::size_t m = first_row; m < cfg.M; ++m) dd(m, n) = data.symbols[i++];
    return dd;
}

}  // namespace

Frame build_rp_frame(const QamStream& data, const GridConfig& cfg, const RpPilot& scheme) {
    validate_scheme(scheme, cfg);
    const FrameLayout layout = FrameLayout::for_scheme(scheme, cfg);
    DDMatrix dd = place_data(data, cfg, layout.data_begin);
    TTMatrix tt = inverse_zak(dd, cfg);
    // Pilot rows of the DD matrix are zero, so after the row-local inverse Zak
    // the overwritten TT rows carried no data.
    const std::vector<cd> pilot = gen_rp_pilot(scheme.sym_len, scheme.pilot_seed);
    for (std::size_t n = 0; n < cfg.N; ++n)
        for (std::size_t m = 0; m < pilot.size(); ++m) tt(m, n) = pilot[m];
    return Frame{std::move(dd), std::move(tt), layout};
}

Frame build_zp_frame(const QamStream& data, const GridConfig& cfg, const ZpPilot& scheme) {
    validate_scheme(scheme, cfg);
    const FrameLayout layout = FrameLayout::for_scheme(scheme, cfg);
    DDMatrix dd = place_data(data, cfg, layout.data_begin);
    dd(scheme.pulse_row, 0) = scheme.pulse_amplitude;
    TTMatrix tt = inverse_zak(dd, cfg);
    return Frame{std::move(dd), std::move(tt), layout};
}

Frame build_frame(const QamStream& data, const GridConfig& cfg, const PilotScheme& scheme) {
    return std::visit([&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, RpPilot>) return build_rp_frame(data, cfg, s);
        else return build_zp_frame(data, cfg, s);
    }, scheme);
}

std::uint64_t TxRecord::frame_seed(std::uint64_t data_seed, std::size_t k) {
    return mix_seed(data_seed, k);
}

TxRecord build_capture(const GridConfig& cfg, const PilotScheme& scheme, std::size_t frames,
                       std::uint64_t data_seed) {
    if (frames < 1) throw std::invalid_argument("build_capture: need at least one frame");
    validate_scheme(scheme, cfg);
    TxRecord rec;
    rec.grid = cfg;
    rec.scheme = scheme;
    rec.frames = frames;
    rec.data_seed = data_seed;
    rec.layout = FrameLayout::for_scheme(scheme, cfg);
    if (const auto* rp = std::get_if<RpPilot>(&scheme))
        rec.rp_pilot = gen_rp_pilot(rp->sym_len, rp->pilot_seed);

    rec.stream.fs = cfg.fs;
    rec.stream.samples.reserve(frames * cfg.samples_per_frame());
    const std::size_t data_len = rec.layout.data_rows() * cfg.N;
    for (std::size_t k = 0; k < frames; ++k) {
        const Frame f = build_frame(random_qam(data_len, TxRecord::frame_seed(data_seed, k)), cfg,
                                    scheme);
        const SampleStream s = serialize(std::span(&f.tt, 1), cfg);
        rec.stream.samples.insert(rec.stream.samples.end(), s.samples.begin(), s.samples.end());
    }
    return rec;
}

}  // namespace rpotfs
