#include "rpotfs/scenario.hpp"

#include "rpotfs/rng.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace rpotfs {

Method parse_method(const std::string& s) {
    if (s == "caf") return Method::caf;
    if (s == "pilot") return Method::pilot;
    if (s == "both") return Method::both;
    throw std::invalid_argument("unknown method '" + s + "' (expected caf|pilot|both)");
}

std::string to_string(Method m) {
    switch (m) {
        case Method::caf: return "caf";
        case Method::pilot: return "pilot";
        case Method::both: return "both";
    }
    return "both";
}

std::string ScenarioError::format(std::size_t line, const std::string& key, const std::string& what) {
    std::string out = "scenario";
    if (line > 0) out += " line " + std::to_string(line);
    if (!key.empty()) out += " (" + key + ")";
    return out + ": " + what;
}

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

std::size_t Scenario::frames() const {
    const double k = std::round(integration_time_s * grid.fs / static_cast<double>(grid.M * grid.N));
    if (!(k >= 1.0)) throw std::invalid_argument("scenario: integration time is shorter than one frame");
    return static_cast<std::size_t>(k);
}

std::uint64_t Scenario::pilot_seed() const {
    if (const auto* rp = std::get_if<RpPilot>(&pilot)) return rp->pilot_seed;
    return 0;
}

void Scenario::set_pilot_seed(std::uint64_t seed) {
    if (auto* rp = std::get_if<RpPilot>(&pilot)) rp->pilot_seed = seed;
}

void Scenario::override_seeds(std::uint64_t seed) {
    data_seed = mix_seed(seed, 0);
    set_pilot_seed(mix_seed(seed, 1));
    noise_seed = mix_seed(seed, 2);
}

void Scenario::validate() const {
    validate_scheme(pilot, grid);
    (void)frames();
    for (const auto& t : targets)
        if (t.delay_samples >= grid.M)
            throw std::invalid_argument("scenario: target delay must be below M");
    if (doppler_bins == 0 || doppler_bins > grid.N * frames())
        throw std::invalid_argument("scenario: radar.doppler_bins must be in [1, N*K]");
    if (caf_delay_bins == 0 || caf_delay_bins > grid.M)
        throw std::invalid_argument("scenario: radar.caf_delay_bins must be in [1, M]");
    if (method != Method::caf && !std::holds_alternative<RpPilot>(pilot))
        throw std::invalid_argument("scenario: the pilot radar needs an RP pilot (use method caf)");
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct Field {
    std::string value;
    std::size_t line;
};

class Reader {
public:
    explicit Reader(std::map<std::string, Field> fields) : fields_(std::move(fields)) {}

    bool has(const std::string& key) const { return fields_.count(key) != 0; }

    std::string str(const std::string& key, const std::string& fallback) {
        auto it = fields_.find(key);
        if (it == fields_.end()) return fallback;
        used_.insert(key);
        return it->second.value;
    }

    double real(const std::string& key, double fallback) {
        auto it = fields_.find(key);
        if (it == fields_.end()) return fallback;
        used_.insert(key);
        return parse_real(it->second, key);
    }

    std::uint64_t uint(const std::string& key, std::uint64_t fallback) {
        auto it = fields_.find(key);
        if (it == fields_.end()) return fallback;
        used_.insert(key);
        const std::string& v = it->second.value;
        std::uint64_t out = 0;
        auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
        if (ec != std::errc() || p != v.data() + v.size())
            throw ScenarioError(it->second.line, key, "expected a non-negative integer, got '" + v + "'");
        return out;
    }

    long integer(const std::string& key, long fallback) {
        auto it = fields_.find(key);
        if (it == fields_.end()) return fallback;
        used_.insert(key);
        const std::string& v = it->second.value;
        long out = 0;
        auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
        if (ec != std::errc() || p != v.data() + v.size())
            throw ScenarioError(it->second.line, key, "expected an integer, got '" + v + "'");
        return out;
    }

    // "re" or "re im"
    cd complex(const std::string& key, cd fallback) {
        auto it = fields_.find(key);
        if (it == fields_.end()) return fallback;
        used_.insert(key);
        std::istringstream in(it->second.value);
        std::string re, im;
        in >> re >> im;
        std::string extra;
        if (re.empty() || (in >> extra))
            throw ScenarioError(it->second.line, key, "expected 're' or 're im'");
        Field f_re{re, it->second.line};
        const double r = parse_real(f_re, key);
        double i = 0.0;
        if (!im.empty()) {
            Field f_im{im, it->second.line};
            i = parse_real(f_im, key);
        }
        return {r, i};
    }

    template <class Fn>
    void wrap(const std::string& key, Fn&& fn) {
        try {
            fn();
        } catch (const ScenarioError&) {
            throw;
        } catch (const std::exception& e) {
            auto it = fields_.find(key);
            throw ScenarioError(it == fields_.end() ? 0 : it->second.line, key, e.what());
        }
    }

    void reject_unused() const {
        for (const auto& [key, f] : fields_)
            if (!used_.count(key)) throw ScenarioError(f.line, key, "unknown key");
    }

    const std::map<std::string, Field>& fields() const { return fields_; }

private:
    static double parse_real(const Field& f, const std::string& key) {
        const std::string& v = f.value;
        if (v == "inf" || v == "+inf") return std::numeric_limits<double>::infinity();
        if (v == "-inf") return -std::numeric_limits<double>::infinity();
        double out = 0.0;
        auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
        if (ec != std::errc() || p != v.data() + v.size())
            throw ScenarioError(f.line, key, "expected a number, got '" + v + "'");
        return out;
    }

    std::map<std::string, Field> fields_;
    std::set<std::string> used_;
};

}  // namespace

Scenario parse_scenario(const std::string& text) {
    std::map<std::string, Field> fields;
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ScenarioError(line_no, "", "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ScenarioError(line_no, "", "missing key");
        if (value.empty()) throw ScenarioError(line_no, key, "missing value");
        if (!fields.emplace(key, Field{value, line_no}).second)
            throw ScenarioError(line_no, key, "duplicate key");
    }

    Reader rd(std::move(fields));
    Scenario s;
    s.name = rd.str("name", s.name);
    s.grid.M = rd.uint("grid.M", s.grid.M);
    s.grid.N = rd.uint("grid.N", s.grid.N);
    s.grid.fs = rd.real("grid.fs", s.grid.fs);
    s.grid.fc = rd.real("grid.fc", s.grid.fc);
    rd.wrap("grid.M", [&] { s.grid.validate(); });

    const std::string scheme = rd.str("pilot.scheme", "rp");
    if (scheme == "rp") {
        RpPilot rp;
        rp.sym_len = rd.uint("pilot.sym_len", rp.sym_len);
        rp.cp_len = rd.uint("pilot.cp_len", rp.sym_len);
        rp.pilot_seed = rd.uint("seed.pilot", rp.pilot_seed);
        s.pilot = rp;
    } else if (scheme == "zp") {
        ZpPilot zp;
        zp.zone_rows = rd.uint("pilot.zone_rows", zp.zone_rows);
        zp.pulse_row = rd.uint("pilot.pulse_row", zp.zone_rows / 2);
        zp.pulse_amplitude = rd.complex("pilot.pulse_amplitude", zp.pulse_amplitude);
        s.pilot = zp;
    } else {
        throw ScenarioError(rd.fields().at("pilot.scheme").line, "pilot.scheme",
                            "expected rp or zp, got '" + scheme + "'");
    }
    rd.wrap("pilot.scheme", [&] { validate_scheme(s.pilot, s.grid); });

    // target.<index>.<field>, ordered by index
    std::map<long, Target> targets;
    for (const auto& [key, f] : rd.fields()) {
        if (key.rfind("target.", 0) != 0) continue;
        const auto dot = key.find('.', 7);
        if (dot == std::string::npos) throw ScenarioError(f.line, key, "expected target.<index>.<field>");
        long idx = 0;
        const std::string idx_s = key.substr(7, dot - 7);
        auto [p, ec] = std::from_chars(idx_s.data(), idx_s.data() + idx_s.size(), idx);
        if (ec != std::errc() || p != idx_s.data() + idx_s.size())
            throw ScenarioError(f.line, key, "target index must be an integer");
        targets.emplace(idx, Target{});
    }
    for (auto& [idx, t] : targets) {
        const std::string base = "target." + std::to_string(idx) + ".";
        t.delay_samples = rd.uint(base + "delay", t.delay_samples);
        t.velocity_mps = rd.real(base + "velocity", t.velocity_mps);
        t.amplitude = rd.complex(base + "amplitude", t.amplitude);
        if (t.delay_samples >= s.grid.M)
            throw ScenarioError(rd.fields().at(base + "delay").line, base + "delay",
                                "delay must be below M");
        s.targets.push_back(t);
    }

    s.snr_db = rd.real("channel.snr_db", s.snr_db);
    s.integration_time_s = rd.real("capture.integration_time", s.integration_time_s);
    rd.wrap("capture.integration_time", [&] { (void)s.frames(); });
    s.data_seed = rd.uint("seed.data", s.data_seed);
    s.noise_seed = rd.uint("seed.noise", s.noise_seed);
    rd.wrap("radar.method", [&] { s.method = parse_method(rd.str("radar.method", "both")); });
    rd.wrap("radar.window", [&] { s.window = parse_window(rd.str("radar.window", "none")); });
    s.doppler_bins = rd.uint("radar.doppler_bins", s.doppler_bins);
    s.caf_first_delay = rd.integer("radar.caf_first_delay", s.caf_first_delay);
    s.caf_delay_bins = rd.uint("radar.caf_delay_bins", s.caf_delay_bins);
    s.pilot_zero_pad = rd.uint("radar.pilot_zero_pad", s.pilot_zero_pad);
    s.peaks.guard_delay = rd.uint("metrics.guard_delay", s.peaks.guard_delay);
    s.peaks.guard_doppler = rd.uint("metrics.guard_doppler", s.peaks.guard_doppler);
    s.peaks.max_peaks = rd.uint("metrics.max_peaks", s.peaks.max_peaks);
    s.peaks.min_separation_db = rd.real("metrics.min_separation_db", s.peaks.min_separation_db);
    s.output_dir = rd.str("output.dir", s.output_dir);
    rd.reject_unused();
    rd.wrap("radar.doppler_bins", [&] { s.validate(); });
    return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str());
}

namespace {

std::string complex_text(cd v) { return format_double(v.real()) + " " + format_double(v.imag()); }

}  // namespace

std::string to_text(const Scenario& s) {
    std::ostringstream o;
    o << "name = " << s.name << "\n\n";
    o << "grid.M = " << s.grid.M << "\n";
    o << "grid.N = " << s.grid.N << "\n";
    o << "grid.fs = " << format_double(s.grid.fs) << "\n";
    o << "grid.fc = " << format_double(s.grid.fc) << "\n\n";
    if (const auto* rp = std::get_if<RpPilot>(&s.pilot)) {
        o << "pilot.scheme = rp\n";
        o << "pilot.sym_len = " << rp->sym_len << "\n";
        o << "pilot.cp_len = " << rp->cp_len << "\n\n";
    } else {
        const auto& zp = std::get<ZpPilot>(s.pilot);
        o << "pilot.scheme = zp\n";
        o << "pilot.zone_rows = " << zp.zone_rows << "\n";
        o << "pilot.pulse_row = " << zp.pulse_row << "\n";
        o << "pilot.pulse_amplitude = " << complex_text(zp.pulse_amplitude) << "\n\n";
    }
    for (std::size_t i = 0; i < s.targets.size(); ++i) {
        const auto& t = s.targets[i];
        o << "target." << i << ".delay = " << t.delay_samples << "\n";
        o << "target." << i << ".velocity = " << format_double(t.velocity_mps) << "\n";
        o << "target." << i << ".amplitude = " << complex_text(t.amplitude) << "\n";
    }
    if (!s.targets.empty()) o << "\n";
    o << "channel.snr_db = " << format_double(s.snr_db) << "\n";
    o << "capture.integration_time = " << format_double(s.integration_time_s) << "\n\n";
    o << "seed.data = " << s.data_seed << "\n";
    if (std::holds_alternative<RpPilot>(s.pilot)) o << "seed.pilot = " << s.pilot_seed() << "\n";
    o << "seed.noise = " << s.noise_seed << "\n\n";
    o << "radar.method = " << to_string(s.method) << "\n";
    o << "radar.doppler_bins = " << s.doppler_bins << "\n";
    o << "radar.window = " << to_string(s.window) << "\n";
    o << "radar.caf_first_delay = " << s.caf_first_delay << "\n";
    o << "radar.caf_delay_bins = " << s.caf_delay_bins << "\n";
    o << "radar.pilot_zero_pad = " << s.pilot_zero_pad << "\n\n";
    o << "metrics.guard_delay = " << s.peaks.guard_delay << "\n";
    o << "metrics.guard_doppler = " << s.peaks.guard_doppler << "\n";
    o << "metrics.max_peaks = " << s.peaks.max_peaks << "\n";
    o << "metrics.min_separation_db = " << format_double(s.peaks.min_separation_db) << "\n\n";
    o << "output.dir = " << s.output_dir << "\n";
    return o.str();
}

}  // namespace rpotfs
