#include "rpotfs/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

namespace rpotfs::fft {
namespace {

// FFTW planning is not thread-safe; plans are created once per (length, sign)
// under a lock and then executed with the new-array interface, which is.
class PlanCache {
public:
    ~PlanCache() {
        for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
    }

    fftw_plan get(std::size_t n, int sign) {
        std::lock_guard lock(mutex_);
        auto key = std::make_pair(n, sign);
        if (auto it = plans_.find(key); it != plans_.end()) return it->second;
        auto* buf = fftw_alloc_complex(n);
        fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, sign, FFTW_ESTIMATE);
        fftw_free(buf);
        plans_.emplace(key, plan);
        return plan;
    }

private:
    std::mutex mutex_;
    std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

// Plans are made on fftw_alloc'd (SIMD-aligned) buffers; new-array execution
// requires the same alignment, so misaligned spans go through a scratch copy.
bool simd_aligned(cd* p) { return fftw_alignment_of(reinterpret_cast<double*>(p)) == 0; }

void execute(std::span<cd> x, int sign) {
    if (x.size() <= 1) return;
    fftw_plan plan = cache().get(x.size(), sign);
    auto* data = reinterpret_cast<fftw_complex*>(x.data());
    if (simd_aligned(x.data())) {
        fftw_execute_dft(plan, data, data);
        return;
    }
    auto* tmp = fftw_alloc_complex(x.size());
    std::copy(x.begin(), x.end(), reinterpret_cast<cd*>(tmp));
    fftw_execute_dft(plan, tmp, tmp);
    std::copy_n(reinterpret_cast<cd*>(tmp), x.size(), x.begin());
    fftw_free(tmp);
}

}  // namespace

void forward(std::span<cd> x) { execute(x, FFTW_FORWARD); }

void inverse(std::span<cd> x) {
    execute(x, FFTW_BACKWARD);
    const double scale = 1.0 / static_cast<double>(x.size());
    for (auto& v : x) v *= scale;
}

void shift(std::span<cd> x) {
    std::rotate(x.begin(), x.begin() + static_cast<std::ptrdiff_t>((x.size() + 1) / 2), x.end());
}

}  // namespace rpotfs::fft
