// rpotfs: RP-OTFS radar simulator front end.
//
//   rpotfs simulate   <scenario> [--out DIR] [--seed N] [--method caf|pilot|both]
//   rpotfs sweep      <scenario> --snr LIST --ti LIST --vmax LIST [--reps R] [...]
//   rpotfs dump-frame <scenario> [--out DIR] [--seed N]

#include "rpotfs/core.hpp"
#include "rpotfs/io.hpp"
#include "rpotfs/pipeline.hpp"
#include "rpotfs/scenario.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace fs = std::filesystem;
using namespace rpotfs;

namespace {

struct Common {
    std::string scenario_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::string method;
};

void add_common(CLI::App* cmd, Common& c, bool with_method) {
    cmd->add_option("scenario", c.scenario_path, "Scenario file")->required()->check(CLI::ExistingFile);
    cmd->add_option("--out", c.out_dir, "Output directory (overrides output.dir)");
    cmd->add_option("--seed", c.seed, "Replace every seed with values derived from N");
    if (with_method)
        cmd->add_option("--method", c.method, "Radar back-end")
            ->check(CLI::IsMember({"caf", "pilot", "both"}));
}

Scenario resolve(const Common& c) {
    Scenario s = load_scenario(c.scenario_path);
    if (!c.out_dir.empty()) s.output_dir = c.out_dir;
    if (c.seed) s.override_seeds(*c.seed);
    if (!c.method.empty()) s.method = parse_method(c.method);
    s.validate();
    return s;
}

void write_manifest(const Scenario& s, std::size_t frames, const std::vector<std::string>& warnings,
                    const std::string& extra) {
    auto out = io::open_output(fs::path(s.output_dir) / "manifest.txt");
    out << "# resolved scenario; run `rpotfs simulate manifest.txt` to reproduce\n";
    out << "# frames = " << frames << "\n";
    for (const auto& w : warnings) out << "# warning: " << w << "\n";
    out << extra;
    out << "\n" << to_text(s);
}

int cmd_simulate(const Common& c) {
    const Scenario s = resolve(c);
    const RunResult res = run_pipeline(s);
    const fs::path dir(s.output_dir);
    std::ostringstream summary;
    for (const auto& m : res.methods) {
        const std::string tag = to_string(m.method);
        {
            auto f = io::open_output(dir / ("map_" + tag + ".csv"));
            io::write_map_csv(f, m.map);
        }
        {
            auto f = io::open_output(dir / ("map_" + tag + ".pgm"));
            io::write_map_pgm(f, m.map);
        }
        {
            auto f = io::open_output(dir / ("peaks_" + tag + ".csv"));
            io::write_peaks_csv(f, m.map, m.report, s.grid);
        }
        summary << "# " << tag << ": floor_rms_db = " << format_double(m.report.floor_rms_db)
                << ", peaks = " << m.report.peaks.size() << "\n";
        std::cout << tag << ": floor " << m.report.floor_rms_db << " dB, output SNR "
                  << m.report.output_snr_db << " dB";
        if (!m.report.peaks.empty()) {
            const Peak& p = m.report.peaks.front();
            std::cout << ", peak at delay " << p.delay_bin << " Doppler bin " << p.doppler_bin << " ("
                      << static_cast<double>(p.doppler_bin) * m.map.doppler_step_hz << " Hz)";
        }
        std::cout << "\n";
    }
    for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
    write_manifest(s, res.frames, res.warnings, summary.str());
    return 0;
}

double parse_time(const std::string& v) {
    std::string num = v;
    double scale = 1.0;
    if (num.size() > 2 && num.ends_with("ms")) {
        num.resize(num.size() - 2);
        scale = 1e-3;
    } else if (num.size() > 1 && num.ends_with("s")) {
        num.resize(num.size() - 1);
    }
    std::size_t used = 0;
    const double x = std::stod(num, &used);
    if (used != num.size()) throw std::invalid_argument("bad integration time '" + v + "'");
    return x * scale;
}

int cmd_sweep(const Common& c, const std::vector<double>& snr, const std::vector<std::string>& ti,
              const std::vector<double>& vmax, std::size_t reps) {
    const Scenario s = resolve(c);
    std::vector<double> ti_s;
    for (const auto& v : ti) ti_s.push_back(parse_time(v));
    const auto cells = run_sweep(s, snr, ti_s, vmax, reps);
    auto f = io::open_output(fs::path(s.output_dir) / "curves.csv");
    io::write_curves_csv(f, cells);
    std::ostringstream extra;
    extra << "# sweep: " << cells.size() << " cells, " << reps << " repetition(s) each\n";
    write_manifest(s, s.frames(), {}, extra.str());
    std::cout << "wrote " << cells.size() << " rows to " << (fs::path(s.output_dir) / "curves.csv").string()
              << "\n";
    return 0;
}

int cmd_dump_frame(const Common& c) {
    const Scenario s = resolve(c);
    const std::size_t data_len = FrameLayout::for_scheme(s.pilot, s.grid).data_rows() * s.grid.N;
    const Frame f = build_frame(random_qam(data_len, TxRecord::frame_seed(s.data_seed, 0)), s.grid, s.pilot);
    const fs::path dir(s.output_dir);
    {
        auto out = io::open_output(dir / "frame_dd.csv");
        io::write_complex_csv(out, f.dd.values);
    }
    {
        auto out = io::open_output(dir / "frame_tt.csv");
        io::write_complex_csv(out, f.tt.values);
    }
    {
        auto out = io::open_output(dir / "frame_layout.csv");
        io::write_layout_csv(out, f.layout, s.grid);
    }
    write_manifest(s, s.frames(), {}, "# dump-frame: frame 0\n");
    std::cout << "wrote frame_dd.csv, frame_tt.csv, frame_layout.csv to " << dir.string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"RP-OTFS integrated sensing and communication radar simulator"};
    app.require_subcommand(1);

    Common sim, sweep, dump;
    auto* c_sim = app.add_subcommand("simulate", "Run one scenario and write maps, peaks and a manifest");
    add_common(c_sim, sim, true);

    auto* c_sweep = app.add_subcommand("sweep", "Cross-product sweep over SNR, integration time and vmax");
    add_common(c_sweep, sweep, true);
    std::vector<double> snr, vmax;
    std::vector<std::string> ti;
    std::size_t reps = 1;
    c_sweep->add_option("--snr", snr, "Input SNR values in dB")->required()->delimiter(',');
    c_sweep->add_option("--ti", ti, "Integration times (seconds, or with an ms suffix)")
        ->required()
        ->delimiter(',');
    c_sweep->add_option("--vmax", vmax, "Fastest target velocity in m/s")->required()->delimiter(',');
    c_sweep->add_option("--reps", reps, "Repetitions per cell")->check(CLI::PositiveNumber);

    auto* c_dump = app.add_subcommand("dump-frame", "Write the DD and TT matrices of one frame");
    add_common(c_dump, dump, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_sim->parsed()) return cmd_simulate(sim);
        if (c_sweep->parsed()) return cmd_sweep(sweep, snr, ti, vmax, reps);
        if (c_dump->parsed()) return cmd_dump_frame(dump);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
