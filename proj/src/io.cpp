#include "rpotfs/io.hpp"

#include "rpotfs/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

namespace rpotfs::io {

void write_map_csv(std::ostream& out, const RadarMap& map) {
    out << "delay_s\\doppler_hz";
    for (std::size_t c = 0; c < map.doppler_bins(); ++c) out << ',' << format_double(map.doppler_hz_of_col(c));
    out << '\n';
    for (std::size_t r = 0; r < map.delay_bins(); ++r) {
        out << format_double(static_cast<double>(map.delay_of_row(r)) * map.delay_step_s);
        for (std::size_t c = 0; c < map.doppler_bins(); ++c) out << ',' << format_double(map.db(r, c));
        out << '\n';
    }
}

void write_map_pgm(std::ostream& out, const RadarMap& map) {
    out << "P2\n# " << map.method << " delay x Doppler, -60..0 dB\n"
        << map.doppler_bins() << ' ' << map.delay_bins() << "\n255\n";
    for (std::size_t r = 0; r < map.delay_bins(); ++r) {
        for (std::size_t c = 0; c < map.doppler_bins(); ++c) {
            const double db = std::clamp(map.db(r, c), -60.0, 0.0);
            const auto px = static_cast<int>(std::lround((db + 60.0) / 60.0 * 255.0));
            out << px << (c + 1 == map.doppler_bins() ? '\n' : ' ');
        }
    }
}

void write_peaks_csv(std::ostream& out, const RadarMap& map, const PeakReport& report,
                     const GridConfig& grid) {
    out << "rank,delay_samples,doppler_bin,doppler_hz,range_m,velocity_mps,level_db,floor_rms_db,"
           "output_snr_db\n";
    for (std::size_t i = 0; i < report.peaks.size(); ++i) {
        const Peak& p = report.peaks[i];
        const double doppler_hz = static_cast<double>(p.doppler_bin) * map.doppler_step_hz;
        const double range = static_cast<double>(p.delay_bin) * kSpeedOfLight / (2.0 * grid.fs);
        const double velocity = velocity_from_doppler(doppler_hz, grid.fc);
        out << i << ',' << p.delay_bin << ',' << p.doppler_bin << ',' << format_double(doppler_hz)
            << ',' << format_double(range) << ',' << format_double(velocity) << ','
            << format_double(p.level_db) << ',' << format_double(report.floor_rms_db) << ','
            << format_double(report.output_snr_db) << '\n';
    }
}

void write_curves_csv(std::ostream& out, const std::vector<SweepCell>& cells) {
    out << "method,snr_db,ti_s,vmax_mps,repetitions,floor_mean_db,floor_std_db,output_snr_mean_db,"
           "output_snr_std_db\n";
    for (const auto& c : cells) {
        out << to_string(c.method) << ',' << format_double(c.snr_db) << ','
            << format_double(c.integration_time_s) << ',' << format_double(c.vmax_mps) << ','
            << c.repetitions << ',' << format_double(c.floor_mean_db) << ','
            << format_double(c.floor_std_db) << ',' << format_double(c.output_snr_mean_db) << ','
            << format_double(c.output_snr_std_db) << '\n';
    }
}

void write_complex_csv(std::ostream& out, const CMatrix& m) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? "," : "") << "re_" << c << ",im_" << c;
    out << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            out << (c ? "," : "") << format_double(m(r, c).real()) << ','
                << format_double(m(r, c).imag());
        out << '\n';
    }
}

CMatrix read_complex_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("complex csv: missing header");
    std::vector<std::vector<cd>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> vals;
        std::size_t pos = 0;
        while (pos <= line.size()) {
            auto next = line.find(',', pos);
            if (next == std::string::npos) next = line.size();
            double v = 0.0;
            auto [p, ec] = std::from_chars(line.data() + pos, line.data() + next, v);
            if (ec != std::errc() || p != line.data() + next)
                throw std::runtime_error("complex csv: bad number");
            vals.push_back(v);
            pos = next + 1;
        }
        if (vals.size() % 2 != 0) throw std::runtime_error("complex csv: odd column count");
        std::vector<cd> row;
        for (std::size_t i = 0; i < vals.size(); i += 2) row.emplace_back(vals[i], vals[i + 1]);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) return {};
    CMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols()) throw std::runtime_error("complex csv: ragged rows");
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
    }
    return m;
}

void write_layout_csv(std::ostream& out, const FrameLayout& layout, const GridConfig& grid) {
    out << "row,zone\n";
    for (std::size_t r = 0; r < grid.M; ++r) {
        const bool pilot = r >= layout.pilot_begin && r < layout.pilot_end;
        out << r << ',' << (pilot ? "pilot" : "data") << '\n';
    }
}

std::ofstream open_output(const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

}  // namespace rpotfs::io
