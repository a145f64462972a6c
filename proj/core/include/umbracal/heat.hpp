#pragma once

// Solvers for d_y F = sign * d_x^m F with F(x, 0) = g(x).
//
// Spectral route: F = IFFT[ e^{sign * y * (ik)^m} FFT[g] ] on a periodic grid,
// k_j = 2 pi * signed_frequency(j, n) / (x_max - x_min). The multiplier at
// k = 0 is exactly 1, so the grid mean is preserved.
//
// Airy route (m = 3): F(x) = int Ai(t) g(x + c t) dt, c = cbrt(3 sign y),
// with g interpolated by 4-point Lagrange cubics and zero outside the grid.
//
// Heat polynomials: e^{y d^m} x^n = H_n^{(m)}(x, y).

#include <functional>
#include <stdexcept>
#include <vector>

#include "umbracal/grid.hpp"
#include "umbracal/series.hpp"

namespace umbracal {

struct EvolutionSpec {
  int m = 2;
  double y = 0.0;
  int sign = 1;

  /// Throws std::invalid_argument for m < 2 or sign not in {-1, +1}.
  void validate() const;

  /// True when |e^{sign y (ik)^m}| grows without bound in k.
  bool ill_posed() const;
};

class IllPosedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct SpectralOptions {
  bool allow_illposed = false;
  /// Reject data that is not negligible at the grid edges.
  bool check_support = true;
};

/// Band-edge multipliers above this make the result alias-dominated.
inline constexpr double kAliasingGain = 1e12;

/// max_k |e^{sign y (ik)^m}| over the grid's frequencies.
double band_edge_gain(const Grid& grid, const EvolutionSpec& spec);

/// Throws IllPosedError for an ill-posed direction unless allowed, and
/// std::invalid_argument when check_support is set and the edge samples
/// exceed 1e-12 of the maximum.
Field evolve_spectral(const Field& f, const EvolutionSpec& spec, const SpectralOptions& options = {});

/// Zero-padded cubic interpolation; throws std::out_of_range more than 25% of
/// the grid length beyond either end.
std::complex<double> interpolate_cubic(const Field& f, double x);

/// Airy-kernel route for d_y F = d_x^3 F (sign folded into y). Requires y != 0.
Field evolve_airy(const Field& f, double y);

/// H_n^{(m)}(x, y)
double evolve_monomial(int m, int n, double x, double y);

/// P(x) e^{-a x^2}, P given by ascending coefficients; a >= 0.
struct PolyGaussian {
  std::vector<double> coefficients;
  double rate = 0.0;

  /// d^k/dx^k at x.
  long double derivative(int k, double x) const;
  bool is_polynomial() const { return rate == 0.0; }
};

class TruncationBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// e^{y d^4} f through the umbral Gauss-Weierstrass transform:
///   (1/sqrt(pi)) int e^{-s^2} f(x - 2 y^{1/4} u^{1/2} s) ds
/// Taylor-expanding f, integrating the Gaussian moments and projecting the
/// order-2 umbra with y^{1/2} kept symbolic, so any sign of y works. Exact for
/// polynomials; otherwise the series in y is asymptotic and is cut at its
/// smallest term among the first N + 1. The returned evaluator throws
/// TruncationBudgetError when that term exceeds budget * max(1, |value|).
std::function<SeriesResult<double>(double)> evolve_gw_quartic(const PolyGaussian& f, double y,
                                                              int truncation,
                                                              double budget = 1e-8);

}  // namespace umbracal
