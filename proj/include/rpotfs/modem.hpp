#pragma once

#include "rpotfs/core.hpp"

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace rpotfs {

// Random-padded pilot: a short OFDM symbol of P seeded 4-QAM values with a
// cyclic prefix as long as the symbol, written straight into TT rows [0, 2P).
struct RpPilot {
    std::size_t sym_len = 8;       // P
    std::size_t cp_len = 8;        // must equal sym_len
    std::uint64_t pilot_seed = 1;

    std::size_t zone_rows() const { return sym_len + cp_len; }
    bool operator==(const RpPilot&) const = default;
};

// Zero-padded pilot: DD rows [0, zone_rows) are zero except one pulse at
// (pulse_row, Doppler bin 0).
struct ZpPilot {
    std::size_t zone_rows = 16;
    std::size_t pulse_row = 8;
    cd pulse_amplitude{1.0, 0.0};

    bool operator==(const ZpPilot&) const = default;
};

using PilotScheme = std::variant<RpPilot, ZpPilot>;

// Rows occupied by the pilot zone for either scheme.
std::size_t pilot_zone_rows(const PilotScheme& scheme);

// Throws std::invalid_argument if the scheme does not fit the grid.
void validate_scheme(const PilotScheme& scheme, const GridConfig& cfg);

// Pilot rows [0, L), data rows [L, M).
struct FrameLayout {
    std::size_t pilot_begin = 0;
    std::size_t pilot_end = 0;
    std::size_t data_begin = 0;
    std::size_t data_end = 0;

    static FrameLayout for_scheme(const PilotScheme& scheme, const GridConfig& cfg);
    std::size_t data_rows() const { return data_end - data_begin; }
    bool operator==(const FrameLayout&) const = default;
};

struct QamStream {
    std::vector<cd> symbols;
    std::uint64_t seed = 0;
};

// Gray-mapped unit-energy 4-QAM: first bit selects the sign of I, second the
// sign of Q (0 -> +, 1 -> -). Bits are 0/1 bytes; an odd count throws.
QamStream map_bits_to_qam(std::span<const std::uint8_t> bits);

// `count` 4-QAM symbols from uniformly random bits drawn with `seed`.
QamStream random_qam(std::size_t count, std::uint64_t seed);

// Time-domain RP pilot of length 2P: [cyclic prefix | symbol], where the symbol is
// the 1/P-normalized inverse DFT of P seeded 4-QAM values and the prefix is a full
// copy of it.
std::vector<cd> gen_rp_pilot(std::size_t sym_len, std::uint64_t pilot_seed);

struct Frame {
    DDMatrix dd;
    TTMatrix tt;
    FrameLayout layout;
};

Frame build_rp_frame(const QamStream& data, const GridConfig& cfg, const RpPilot& scheme);
Frame build_zp_frame(const QamStream& data, const GridConfig& cfg, const ZpPilot& scheme);

// Dispatches on the scheme; data length must be (M - L) * N.
Frame build_frame(const QamStream& data, const GridConfig& cfg, const PilotScheme& scheme);

// Everything the receiver is assumed to know about what was sent.
struct TxRecord {
    GridConfig grid;
    PilotScheme scheme;
    std::size_t frames = 0;
    std::uint64_t data_seed = 0;
    FrameLayout layout;
    std::vector<cd> rp_pilot;  // 2P samples for RP captures, empty for ZP
    SampleStream stream;       // the re-modulated reference signal

    // Seed used for the data of frame k.
    static std::uint64_t frame_seed(std::uint64_t data_seed, std::size_t k);
};

// K frames with independently seeded data and one shared pilot, serialized.
TxRecord build_capture(const GridConfig& cfg, const PilotScheme& scheme, std::size_t frames,
                       std::uint64_t data_seed);

}  // namespace rpotfs
