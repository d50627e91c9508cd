#include "rpotfs/radar_caf.hpp"

#include "rpotfs/fft.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace rpotfs {
namespace {

void check_inputs(const SampleStream& ref, const SampleStream& srv, const CafOptions& opt) {
    if (ref.empty() || srv.empty()) throw std::invalid_argument("caf: empty stream");
    if (ref.size() != srv.size()) throw std::invalid_argument("caf: stream length mismatch");
    if (opt.n_delay == 0 || opt.n_doppler == 0)
        throw std::invalid_argument("caf: need at least one delay and one Doppler bin");
    if (opt.n_doppler > ref.size())
        throw std::invalid_argument("caf: more Doppler bins than samples in the capture");
}

}  // namespace

CMatrix caf_surface(const SampleStream& ref, const SampleStream& srv, const CafOptions& opt) {
    check_inputs(ref, srv, opt);
    const std::size_t T = ref.size();
    const long first_bin = -static_cast<long>(opt.n_doppler / 2);

    std::vector<double> window;
    if (opt.window != SlowTimeWindow::none) {
        window.resize(T);
        for (std::size_t t = 0; t < T; ++t) window[t] = window_value(opt.window, t, T);
    }

    CMatrix out(opt.n_delay, opt.n_doppler);
    std::atomic<std::size_t> next_row{0};
    auto worker = [&] {
        std::vector<cd> lag(T);
        for (std::size_t r = next_row++; r < opt.n_delay; r = next_row++) {
            const long d = opt.first_delay + static_cast<long>(r);
            std::fill(lag.begin(), lag.end(), cd{});
            const long t_lo = std::max(0L, d);
            const long t_hi = std::min(static_cast<long>(T), static_cast<long>(T) + d);
            for (long t = t_lo; t < t_hi; ++t) {
                const auto ti = static_cast<std::size_t>(t);
                cd v = srv.samples[ti] * std::conj(ref.samples[static_cast<std::size_t>(t - d)]);
                if (!window.empty()) v *= window[ti];
                lag[ti] = v;
            }
            fft::forward(lag);
            for (std::size_t c = 0; c < opt.n_doppler; ++c) {
                const long k = first_bin + static_cast<long>(c);
                const long idx = k < 0 ? k + static_cast<long>(T) : k;
                out(r, c) = lag[static_cast<std::size_t>(idx)];
            }
        }
    };

    const std::size_t n_threads =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, opt.n_delay);
    std::vector<std::jthread> pool;
    for (std::size_t i = 1; i < n_threads; ++i) pool.emplace_back(worker);
    worker();
    pool.clear();
    return out;
}

RadarMap compute_caf(const SampleStream& ref, const SampleStream& srv, const CafOptions& opt) {
    const CMatrix surface = caf_surface(ref, srv, opt);
    RMatrix mag(surface.rows(), surface.cols());
    for (std::size_t i = 0; i < surface.size(); ++i) mag.data()[i] = std::abs(surface.data()[i]);
    const double fs = ref.fs > 0.0 ? ref.fs : 1.0;
    return normalized_map(std::move(mag), opt.first_delay, -static_cast<long>(opt.n_doppler / 2),
                          1.0 / fs, fs / static_cast<double>(ref.size()), "caf");
}

}  // namespace rpotfs
