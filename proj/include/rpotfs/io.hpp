#pragma once

#include "rpotfs/metrics.hpp"
#include "rpotfs/modem.hpp"
#include "rpotfs/pipeline.hpp"
#include "rpotfs/radar_map.hpp"

#include <filesystem>
#include <iosfwd>
#include <vector>

namespace rpotfs::io {

// Header "delay_s\doppler_hz" followed by the Doppler axis; one row per delay
// bin starting with its delay in seconds. Cells are dB relative to the peak.
void write_map_csv(std::ostream& out, const RadarMap& map);

// Plain PGM (P2), one pixel row per delay bin, dB clamped to [-60, 0] and
// mapped linearly onto 0..255.
void write_map_pgm(std::ostream& out, const RadarMap& map);

void write_peaks_csv(std::ostream& out, const RadarMap& map, const PeakReport& report,
                     const GridConfig& grid);

void write_curves_csv(std::ostream& out, const std::vector<SweepCell>& cells);

// Complex matrix as CSV: header re_0,im_0,re_1,im_1,...; one line per row.
void write_complex_csv(std::ostream& out, const CMatrix& m);
CMatrix read_complex_csv(std::istream& in);

void write_layout_csv(std::ostream& out, const FrameLayout& layout, const GridConfig& grid);

// Opens `path` for writing, creating parent directories; throws on failure.
std::ofstream open_output(const std::filesystem::path& path);

}  // namespace rpotfs::io
