#pragma once

#include "rpotfs/channel.hpp"
#include "rpotfs/core.hpp"
#include "rpotfs/metrics.hpp"
#include "rpotfs/modem.hpp"
#include "rpotfs/radar_caf.hpp"

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace rpotfs {

enum class Method { caf, pilot, both };

Method parse_method(const std::string& s);
std::string to_string(Method m);

// Thrown for malformed scenario text; carries the offending line and key.
class ScenarioError : public std::runtime_error {
public:
    ScenarioError(std::size_t line, std::string key, const std::string& what)
        : std::runtime_error(format(line, key, what)), line_(line), key_(std::move(key)) {}

    std::size_t line() const { return line_; }
    const std::string& key() const { return key_; }

private:
    static std::string format(std::size_t line, const std::string& key, const std::string& what);
    std::size_t line_;
    std::string key_;
};

struct Scenario {
    std::string name = "scenario";
    GridConfig grid;
    PilotScheme pilot = RpPilot{};
    std::vector<Target> targets;
    double snr_db = 0.0;
    double integration_time_s = 0.1;
    std::uint64_t data_seed = 1;
    std::uint64_t noise_seed = 3;
    Method method = Method::both;
    std::string output_dir = "out";

    // Radar processing. Both maps are cropped to the same n_doppler bins.
    std::size_t doppler_bins = 1024;
    SlowTimeWindow window = SlowTimeWindow::none;
    long caf_first_delay = -16;
    std::size_t caf_delay_bins = 64;
    std::size_t pilot_zero_pad = 0;
    PeakOptions peaks;

    // K = round(integration_time_s * fs / (M N)); throws if that is zero.
    std::size_t frames() const;

    std::uint64_t pilot_seed() const;
    void set_pilot_seed(std::uint64_t seed);

    // Every seed replaced by a deterministic function of `seed`.
    void override_seeds(std::uint64_t seed);

    void validate() const;
};

// Flat "section.key = value" text, '#' comments, blank lines ignored.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::filesystem::path& path);

// Canonical text form with every resolved field; parse_scenario(to_text(s))
// reproduces s exactly (doubles are written round-trip safe).
std::string to_text(const Scenario& s);

// Shortest decimal that parses back to the same double.
std::string format_double(double v);

}  // namespace rpotfs
