#pragma once

#include "rpotfs/core.hpp"
#include "rpotfs/modem.hpp"
#include "rpotfs/radar_map.hpp"

namespace rpotfs {

// One CIR snapshot per slow-time column: P tap rows x (N * K) columns.
struct CirMatrix {
    CMatrix taps;
    double column_period_s = 0.0;  // M / fs
    double tap_period_s = 0.0;     // 1 / fs
};

// Least-squares CIR per column of an RP capture. The receiver is assumed to be
// aligned to the capture start. For each column the P samples after the cyclic
// prefix are DFT'd, divided by the DFT of the known pilot symbol and brought
// back to the tap domain.
CirMatrix estimate_cir_rp(const SampleStream& rx, const TxRecord& tx);

// ZP estimate for one received frame: the DD pilot zone of zak(rx) divided cell
// by cell by the pulse amplitude. Cells whose received magnitude is more than
// |threshold_db| below the zone peak are zeroed; -inf disables the threshold.
// Result is zone_rows x N, row r being delay r relative to the zone start.
CMatrix estimate_cir_zp(const TTMatrix& rx, const GridConfig& cfg, const ZpPilot& scheme,
                        double threshold_db);

// Forward DFT of every tap row over all columns (zero-padded by `zero_pad`
// columns, optionally windowed), shifted so zero Doppler is centered, 0 dB peak.
RadarMap cir_to_dd_map(const CirMatrix& cir, std::size_t zero_pad = 0,
                       SlowTimeWindow window = SlowTimeWindow::none);

}  // namespace rpotfs
