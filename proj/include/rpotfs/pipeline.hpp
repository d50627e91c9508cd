#pragma once

#include "rpotfs/metrics.hpp"
#include "rpotfs/modem.hpp"
#include "rpotfs/radar_map.hpp"
#include "rpotfs/scenario.hpp"

#include <string>
#include <vector>

namespace rpotfs {

struct MethodResult {
    Method method = Method::caf;  // caf or pilot, never both
    RadarMap map;
    PeakReport report;
};

struct RunResult {
    std::size_t frames = 0;
    std::vector<MethodResult> methods;
    std::vector<std::string> warnings;

    const MethodResult* find(Method m) const;
};

// Transmit capture -> channel -> requested radar back-ends -> peak reports.
RunResult run_pipeline(const Scenario& s);

// Scales every target's velocity so the fastest one moves at vmax_mps (sign kept);
// stationary-only target lists are all set to vmax_mps.
Scenario with_vmax(Scenario s, double vmax_mps);

// Seeds for repetition r: r = 0 keeps the scenario seeds, later repetitions
// derive fresh data and noise seeds. The pilot stays fixed.
Scenario with_repetition(Scenario s, std::size_t r);

struct SweepCell {
    Method method = Method::caf;
    double snr_db = 0.0;
    double integration_time_s = 0.0;
    double vmax_mps = 0.0;
    std::size_t repetitions = 0;
    double floor_mean_db = 0.0;
    double floor_std_db = 0.0;
    double output_snr_mean_db = 0.0;
    double output_snr_std_db = 0.0;
};

// Full cross product of the lists; one cell per (method, snr, ti, vmax).
std::vector<SweepCell> run_sweep(const Scenario& base, const std::vector<double>& snr_db,
                                 const std::vector<double>& integration_time_s,
                                 const std::vector<double>& vmax_mps, std::size_t repetitions);

// Sweep over input SNR only, at the scenario's own integration time and targets.
std::vector<SweepCell> snr_sweep(const Scenario& base, const std::vector<double>& snr_db,
                                 std::size_t repetitions);

}  // namespace rpotfs
