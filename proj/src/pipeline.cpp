#include "rpotfs/pipeline.hpp"

#include "rpotfs/channel.hpp"
#include "rpotfs/radar_caf.hpp"
#include "rpotfs/radar_pilot.hpp"
#include "rpotfs/rng.hpp"

#include <algorithm>
#include <cmath>

namespace rpotfs {

const MethodResult* RunResult::find(Method m) const {
    for (const auto& r : methods)
        if (r.method == m) return &r;
    return nullptr;
}

RunResult run_pipeline(const Scenario& s) {
    s.validate();
    RunResult out;
    out.frames = s.frames();
    const TxRecord tx = build_capture(s.grid, s.pilot, out.frames, s.data_seed);

    ChannelConfig ch{s.targets, s.snr_db, s.noise_seed, s.grid.fc, s.grid.fs};
    SampleStream rx;
    if (s.targets.empty()) {
        if (std::isinf(s.snr_db))
            throw std::invalid_argument("scenario has no targets and no noise; nothing to image");
        // No echo to reference the SNR to, so the noise is set against the
        // transmitted power instead.
        out.warnings.push_back("no targets: noise power referenced to the transmit power");
        rx = add_noise_power(apply_targets(tx.stream, ch),
                             mean_power(tx.stream) / std::pow(10.0, s.snr_db / 10.0), s.noise_seed);
    } else {
        rx = apply_channel(tx.stream, ch);
    }

    if (s.method != Method::pilot) {
        CafOptions opt;
        opt.first_delay = s.caf_first_delay;
        opt.n_delay = s.caf_delay_bins;
        opt.n_doppler = s.doppler_bins;
        opt.window = s.window;
        RadarMap map = compute_caf(tx.stream, rx, opt);
        PeakReport rep = analyze_map(map, s.peaks);
        out.methods.push_back({Method::caf, std::move(map), std::move(rep)});
    }
    if (s.method != Method::caf) {
        const CirMatrix cir = estimate_cir_rp(rx, tx);
        RadarMap map = crop_doppler(cir_to_dd_map(cir, s.pilot_zero_pad, s.window), s.doppler_bins);
        PeakReport rep = analyze_map(map, s.peaks);
        out.methods.push_back({Method::pilot, std::move(map), std::move(rep)});
    }
    return out;
}

Scenario with_vmax(Scenario s, double vmax_mps) {
    double fastest = 0.0;
    for (const auto& t : s.targets) fastest = std::max(fastest, std::abs(t.velocity_mps));
    for (auto& t : s.targets)
        t.velocity_mps = fastest > 0.0 ? t.velocity_mps * (vmax_mps / fastest) : vmax_mps;
    return s;
}

Scenario with_repetition(Scenario s, std::size_t r) {
    if (r == 0) return s;
    s.data_seed = mix_seed(s.data_seed, 1000 + r);
    s.noise_seed = mix_seed(s.noise_seed, 1000 + r);
    return s;
}

namespace {

struct Stats {
    double mean = 0.0;
    double stddev = 0.0;
};

Stats stats(const std::vector<double>& v) {
    Stats st;
    for (double x : v) st.mean += x;
    st.mean /= static_cast<double>(v.size());
    if (v.size() > 1) {
        double acc = 0.0;
        for (double x : v) acc += (x - st.mean) * (x - st.mean);
        st.stddev = std::sqrt(acc / static_cast<double>(v.size() - 1));
    }
    return st;
}

}  // namespace

std::vector<SweepCell> run_sweep(const Scenario& base, const std::vector<double>& snr_db,
                                 const std::vector<double>& integration_time_s,
                                 const std::vector<double>& vmax_mps, std::size_t repetitions) {
    if (snr_db.empty() || integration_time_s.empty() || vmax_mps.empty())
        throw std::invalid_argument("sweep: every list needs at least one value");
    if (repetitions < 1) throw std::invalid_argument("sweep: repetitions must be >= 1");

    std::vector<Method> methods;
    if (base.method != Method::pilot) methods.push_back(Method::caf);
    if (base.method != Method::caf) methods.push_back(Method::pilot);

    std::vector<SweepCell> cells;
    for (double ti : integration_time_s) {
        for (double vmax : vmax_mps) {
            for (double snr : snr_db) {
                Scenario s = with_vmax(base, vmax);
                s.integration_time_s = ti;
                s.snr_db = snr;
                std::vector<std::vector<double>> floors(methods.size());
                for (std::size_t r = 0; r < repetitions; ++r) {
                    const RunResult res = run_pipeline(with_repetition(s, r));
                    for (std::size_t m = 0; m < methods.size(); ++m)
                        floors[m].push_back(res.find(methods[m])->report.floor_rms_db);
                }
                for (std::size_t m = 0; m < methods.size(); ++m) {
                    const Stats st = stats(floors[m]);
                    // output SNR is the negated floor, so its spread is the same
                    cells.push_back(SweepCell{methods[m], snr, ti, vmax, repetitions, st.mean,
                                              st.stddev, -st.mean, st.stddev});
                }
            }
        }
    }
    std::stable_sort(cells.begin(), cells.end(), [](const SweepCell& a, const SweepCell& b) {
        return static_cast<int>(a.method) < static_cast<int>(b.method);
    });
    return cells;
}

std::vector<SweepCell> snr_sweep(const Scenario& base, const std::vector<double>& snr_db,
                                 std::size_t repetitions) {
    double vmax = 0.0;
    for (const auto& t : base.targets) vmax = std::max(vmax, std::abs(t.velocity_mps));
    return run_sweep(base, snr_db, {base.integration_time_s}, {vmax}, repetitions);
}

}  // namespace rpotfs
