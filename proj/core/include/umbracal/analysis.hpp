#pragma once

// Integral and series identities of the order-2 umbra, each computed by two
// routes: quadrature (or a truncated series) against a closed form.

#include <complex>
#include <variant>
#include <vector>

#include "umbracal/grid.hpp"
#include "umbracal/quadrature.hpp"
#include "umbracal/series.hpp"

namespace umbracal {

/// Two routes to the same number.
struct IdentityCheck {
  double computed = 0.0;   // quadrature or series route
  double reference = 0.0;  // closed form
  double error_estimate = 0.0;
  bool converged = true;

  double abs_diff() const { return std::abs(computed - reference); }
  double rel_diff() const;
};

// Gamma-function identities -------------------------------------------------

/// max relative defect of Gamma(x) Gamma(1 - x) = pi / sin(pi x) over a fixed
/// set of non-integer points in (-3, 4).
double reflection_defect();

/// max relative defect of Gamma(x) Gamma(x + 1/2) = 2^{1-2x} sqrt(pi) Gamma(2x)
/// over a fixed set of points in (0, 6).
double duplication_defect();

// Gaussian-type integrals ---------------------------------------------------

/// int_0^inf e^{-x^2} x^{nu-1} dx against Gamma(nu/2) / 2. Requires nu > 0.
IdentityCheck mellin_gaussian(double nu);

/// int e^{-x^4} dx over the real line against Gamma(1/4) / 2.
IdentityCheck quartic_gaussian();

/// e^{-x^2} sum_{r<=N} (-alpha x)^r h_{r/2} / r!, the projection of
/// e^{-x^2} e^{-alpha u^{1/2} x} for the order-2 umbra u.
SeriesResult<double> super_gaussian_integrand(double alpha, double x, int truncation);

/// Largest |alpha| accepted by super_gaussian_integral.
inline constexpr double kSuperGaussianMaxAlpha = 3.5;

/// Quadrature of the projected integrand over the real line against
/// sqrt(pi) e^{(alpha/2)^4}. The series length adapts per node; throws
/// std::overflow_error when it would exceed the term budget and
/// std::domain_error for |alpha| > kSuperGaussianMaxAlpha.
IdentityCheck super_gaussian_integral(double alpha);

// Error function ------------------------------------------------------------

/// erf(x) = (2x / sqrt(pi)) sum_{s<=N} h_s (ix)^s / (s+1)!
SeriesResult<double> erf_series(double x, int truncation);

/// (2 / sqrt(pi)) int_0^x e^{-t^2} dt by tanh-sinh quadrature.
double erf_quadrature(double x);

// Airy ----------------------------------------------------------------------

/// int Ai over the real line. The positive side and [-X, 0] are integrated
/// numerically; (-inf, -X] is reduced by parts using Ai'' = t Ai, leaving a
/// remainder bounded in error_estimate. Reference is 1.
IdentityCheck airy_integral();

/// Ai(0) from (1/pi) cos(pi/6) int_0^inf e^{-s^3/3} ds (the oscillatory
/// integral representation after rotating the contour) against
/// 3^{-2/3} / Gamma(2/3).
IdentityCheck airy_at_zero();

/// int Ai(t) e^{z t} dt with z = cbrt(3 lambda) x, against e^{lambda x^3}.
/// Requires lambda > 0 and z >= 0; z = 0 reduces to airy_integral().
IdentityCheck airy_exp_identity(double lambda, double x);

// Fourier-Gabor transform ---------------------------------------------------

/// A e^{-a (t - c)^2}
struct GaussianSignal {
  double amplitude = 1.0;
  double rate = 1.0;
  double center = 0.0;
};

/// Samples x(t0 + i h); integrals use the trapezoid rule.
struct SampledSignal {
  double t0 = 0.0;
  double spacing = 1.0;
  std::vector<std::complex<double>> values;

  static SampledSignal from_field(const Field& f);
};

using Signal = std::variant<GaussianSignal, SampledSignal>;

/// Throws std::invalid_argument for rate <= 0, fewer than 2 samples or a
/// non-positive spacing.
void validate(const Signal& sig);

/// int x(t) e^{-pi (t - tau)^2 - i omega t} dt by quadrature.
std::complex<double> gabor_direct(const Signal& sig, double tau, double omega);

/// Closed form of gabor_direct for a Gaussian signal.
std::complex<double> gabor_gaussian_exact(const GaussianSignal& sig, double tau, double omega);

/// int x(t) (t - tau)^n dt for n = 0..N; analytic for Gaussian signals.
std::vector<std::complex<double>> gabor_moments(const Signal& sig, double tau, int truncation);

/// False when the Hermite expansion is known to diverge: a Gaussian signal
/// must decay faster than the window (rate > pi).
bool gabor_series_converges(const Signal& sig);

/// e^{-i omega tau} sum_{n<=N} (-i)^n H_n(omega, pi) / n! * M_n
SeriesResult<std::complex<double>> gabor_series(const Signal& sig, double tau, double omega,
                                                int truncation);

}  // namespace umbracal
