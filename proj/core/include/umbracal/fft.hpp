#pragma once

// In-place iterative radix-2 FFT. Sizes must be powers of two.
//
// forward:  X_k = sum_j x_j e^{-2 pi i j k / n}
// inverse:  x_j = (1/n) sum_k X_k e^{+2 pi i j k / n}

#include <complex>
#include <span>

namespace umbracal {

void fft(std::span<std::complex<double>> data);
void inverse_fft(std::span<std::complex<double>> data);

/// Signed integer frequency of DFT bin j: j for j < n/2, j - n otherwise
/// (the Nyquist bin n/2 maps to -n/2).
inline int signed_frequency(int j, int n) { return j < n / 2 ? j : j - n; }

}  // namespace umbracal
