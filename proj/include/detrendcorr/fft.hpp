#pragma once

#include <complex>
#include <vector>

namespace detrendcorr {

/// In-place iterative radix-2 FFT. Size must be a power of two.
void fft_radix2(std::vector<std::complex<double>>& a, bool inverse);

bool is_power_of_two(std::size_t n);

}  // namespace detrendcorr
