#include "umbracal/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace umbracal {
namespace {

// Forward twiddles e^{-2 pi i k / n}, k < n/2, evaluated directly in long
// double so rounding does not accumulate along a recurrence. Cached per size.
const std::vector<std::complex<double>>& twiddles(std::size_t n) {
  thread_local std::unordered_map<std::size_t, std::vector<std::complex<double>>> cache;
  auto [it, inserted] = cache.try_emplace(n);
  if (inserted) {
    it->second.resize(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
      const long double angle = -2.0L * std::numbers::pi_v<long double> * k / n;
      it->second[k] = {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
    }
  }
  return it->second;
}

void transform(std::span<std::complex<double>> a, bool inverse) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("fft: size must be a power of two");

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  const auto& w = twiddles(n);
  const double conj = inverse ? -1.0 : 1.0;

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const std::complex<double> u = a[start + k];
        const std::complex<double> x = a[start + k + half];
        const double wr = w[k * stride].real();
        const double wi = conj * w[k * stride].imag();
        const std::complex<double> v{x.real() * wr - x.imag() * wi, x.real() * wi + x.imag() * wr};
        a[start + k] = u + v;
        a[start + k + half] = u - v;
      }
    }
  }

  if (inverse) {
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& x : a) x *= scale;
  }
}

}  // namespace

void fft(std::span<std::complex<double>> data) { transform(data, false); }

void inverse_fft(std::span<std::complex<double>> data) { transform(data, true); }

}  // namespace umbracal
