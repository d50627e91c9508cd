#pragma once

#include "rpotfs/types.hpp"

#include <span>

namespace rpotfs::fft {

// Unnormalized forward DFT: X[k] = sum_n x[n] exp(-j 2 pi k n / L).
void forward(std::span<cd> x);

// Inverse DFT carrying the 1/L factor.
void inverse(std::span<cd> x);

// Swap halves so that bin 0 lands at index L/2 (L even) or (L-1)/2 (L odd).
void shift(std::span<cd> x);

}  // namespace rpotfs::fft
