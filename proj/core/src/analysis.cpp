#include "umbracal/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "umbracal/airy.hpp"
#include "umbracal/numbers.hpp"
#include "umbracal/polynomials.hpp"
#include "umbracal/special.hpp"

namespace umbracal {
namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(kPi);

// Order-2 moments h_{r/2}, r = 0..count-1.
std::vector<long double> half_moments(int count) {
  std::vector<long double> out(static_cast<std::size_t>(count));
  for (int r = 0; r < count; ++r) out[static_cast<std::size_t>(r)] = hermite_moment(2, HalfInteger(r));
  return out;
}

constexpr int kSuperGaussianBudget = 6000;

// Sums the projected super-Gaussian series until four consecutive non-zero
// terms fall below 1e-21 of the largest one.
long double super_gaussian_adaptive(double alpha, double x, const std::vector<long double>& h) {
  const long double step = -static_cast<long double>(alpha) * x;
  if (step == 0.0L) return 1.0L;
  CompensatedSum<long double> acc;
  long double p = 1.0L;
  long double biggest = 0.0L;
  int quiet = 0;
  for (int r = 0; r < static_cast<int>(h.size()); ++r) {
    if (r > 0) p *= step / r;
    const long double term = p * h[static_cast<std::size_t>(r)];
    acc.add(term);
    if (term == 0.0L) continue;
    biggest = std::max(biggest, std::abs(term));
    quiet = std::abs(term) < 1e-21L * biggest ? quiet + 1 : 0;
    if (quiet >= 4 && r > 8) return acc.value();
  }
  throw std::overflow_error("super-Gaussian series exceeded its term budget");
}

}  // namespace

double IdentityCheck::rel_diff() const {
  const double scale = std::abs(reference);
  return scale > 0.0 ? abs_diff() / scale : abs_diff();
}

double reflection_defect() {
  double worst = 0.0;
  for (double x : {-2.7, -1.5, -0.25, 0.1, 0.3, 0.5, 0.77, 1.3, 2.5, 3.9}) {
    const double lhs = gamma(x) * gamma(1.0 - x);
    const double rhs = kPi / std::sin(kPi * x);
    worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
  }
  return worst;
}

double duplication_defect() {
  double worst = 0.0;
  for (double x : {0.05, 0.25, 0.5, 0.75, 1.0, 1.6, 2.25, 3.5, 5.9}) {
    const double lhs = gamma(x) * gamma(x + 0.5);
    const double rhs = std::pow(2.0, 1.0 - 2.0 * x) * kSqrtPi * gamma(2.0 * x);
    worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
  }
  return worst;
}

IdentityCheck mellin_gaussian(double nu) {
  if (!(nu > 0.0)) throw std::domain_error("mellin_gaussian: nu must be > 0");
  const auto q = integrate(
      [nu](double x) { return std::exp(-x * x) * std::pow(x, nu - 1.0); },
      QuadratureSpec::half_line(0.0, 1e-14));
  return {q.value, gamma(0.5 * nu) / 2.0, q.error_estimate, q.converged};
}

IdentityCheck quartic_gaussian() {
  const auto q = integrate([](double x) { return std::exp(-x * x * x * x); },
                           QuadratureSpec::whole_line(1e-14));
  return {q.value, gamma(0.25) / 2.0, q.error_estimate, q.converged};
}

SeriesResult<double> super_gaussian_integrand(double alpha, double x, int truncation) {
  if (truncation < 0) throw std::invalid_argument("super_gaussian_integrand: N >= 0");
  const long double step = -static_cast<long double>(alpha) * x;
  CompensatedSum<long double> acc;
  long double p = 1.0L;
  long double last = 1.0L;
  for (int r = 0; r <= truncation; ++r) {
    if (r > 0) p *= step / r;
    const long double term = p * hermite_moment(2, HalfInteger(r));
    acc.add(term);
    if (term != 0.0L) last = std::abs(term);
  }
  const double g = std::exp(-x * x);
  return {g * static_cast<double>(acc.value()), truncation + 1, g * static_cast<double>(last)};
}

IdentityCheck super_gaussian_integral(double alpha) {
  if (!(std::abs(alpha) <= kSuperGaussianMaxAlpha)) {
    throw std::domain_error("super_gaussian_integral: |alpha| must be <= 3.5");
  }
  const std::vector<long double> h = half_moments(kSuperGaussianBudget);
  auto f = [&](double x) {
    return std::exp(-x * x) * static_cast<double>(super_gaussian_adaptive(alpha, x, h));
  };
  // Extend the range until the integrand is negligible on both sides.
  double peak = f(0.0);
  double edge = 4.0;
  for (double x = 0.25; x <= edge; x += 0.25) peak = std::max({peak, std::abs(f(x)), std::abs(f(-x))});
  while (std::max(std::abs(f(edge)), std::abs(f(-edge))) > 1e-18 * peak) {
    edge += 0.5;
    peak = std::max({peak, std::abs(f(edge)), std::abs(f(-edge))});
  }
  const auto q = integrate(f, QuadratureSpec::finite(-edge, edge, 1e-13));
  return {q.value, kSqrtPi * std::exp(std::pow(0.5 * alpha, 4)), q.error_estimate, q.converged};
}

SeriesResult<double> erf_series(double x, int truncation) {
  if (truncation < 0) throw std::invalid_argument("erf_series: N >= 0");
  std::vector<std::complex<double>> terms;
  terms.reserve(static_cast<std::size_t>(truncation) + 1);
  // (ix)^s / (s+1)! built iteratively, times h_s.
  std::complex<long double> p = 1.0L;
  const std::complex<long double> ix(0.0L, x);
  for (int s = 0; s <= truncation; ++s) {
    if (s > 0) p *= ix / static_cast<long double>(s + 1);
    const long double h = hermite_moment(2, HalfInteger::integer(s));
    terms.push_back(std::complex<double>(p * h));
  }
  const auto sum = sum_all<std::complex<double>>(terms);
  if (std::abs(sum.value.imag()) > 1e-12 * std::max(1.0, std::abs(sum.value.real()))) {
    throw std::logic_error("erf_series: imaginary residue did not cancel");
  }
  const double scale = 2.0 * x / kSqrtPi;
  return {scale * sum.value.real(), sum.terms_used, std::abs(scale) * sum.last_term};
}

double erf_quadrature(double x) {
  if (x == 0.0) return 0.0;
  const double a = std::min(0.0, x);
  const double b = std::max(0.0, x);
  const auto q = integrate([](double t) { return std::exp(-t * t); },
                           QuadratureSpec::finite(a, b, 1e-15));
  return (x > 0.0 ? 2.0 : -2.0) / kSqrtPi * q.value;
}

IdentityCheck airy_integral() {
  constexpr double kX = 100.0;
  const auto positive = integrate([](double t) { return airy(t); },
                                  QuadratureSpec::half_line(0.0, 1e-14));
  const GaussRule rule = gauss_legendre_rule(16);
  const double middle = integrate_panels<double>(
      [](double t) { return airy(t); }, -kX, 0.0,
      [](double t) { return std::min(1.0, 2.0 / (1.0 + std::sqrt(std::abs(t)))); }, rule);
  // int_{-inf}^{-X} Ai = Ai'(-X)/(-X) + Ai(-X)/X^2 + 2 I3,
  // I3 = Ai'(-X)/X^4 - 4 Ai(-X)/X^5 + 20 I6, |I6| <= X^{-21/4} / (21/4 sqrt(pi)).
  const AiryPair at = airy_pair(-kX);
  const double i3 = at.aip / std::pow(kX, 4) - 4.0 * at.ai / std::pow(kX, 5);
  const double tail = -at.aip / kX + at.ai / (kX * kX) + 2.0 * i3;
  const double remainder = 40.0 * std::pow(kX, -5.25) / (5.25 * kSqrtPi);
  return {positive.value + middle + tail, 1.0, positive.error_estimate + remainder,
          positive.converged};
}

IdentityCheck airy_at_zero() {
  const auto q = integrate([](double s) { return std::exp(-s * s * s / 3.0); },
                           QuadratureSpec::half_line(0.0, 1e-15));
  const double computed = std::cos(kPi / 6.0) / kPi * q.value;
  const double reference = std::pow(3.0, -2.0 / 3.0) / gamma(2.0 / 3.0);
  return {computed, reference, q.error_estimate, q.converged};
}

IdentityCheck airy_exp_identity(double lambda, double x) {
  if (!(lambda > 0.0)) throw std::domain_error("airy_exp_identity: lambda must be > 0");
  const double z = std::cbrt(3.0 * lambda) * x;
  if (z < 0.0) throw std::domain_error("airy_exp_identity: needs cbrt(3 lambda) x >= 0");
  const double reference = std::exp(lambda * x * x * x);
  if (z == 0.0) {
    IdentityCheck c = airy_integral();
    c.reference = reference;
    return c;
  }
  const double span = 45.0 / z;
  if (span > kAiryEnvelope) throw std::domain_error("airy_exp_identity: z too small");
  const auto positive = integrate([z](double t) { return airy(t) * std::exp(z * t); },
                                  QuadratureSpec::half_line(0.0, 1e-13));
  const GaussRule rule = gauss_legendre_rule(16);
  const double negative = integrate_panels<double>(
      [z](double t) { return airy(t) * std::exp(z * t); }, -span, 0.0,
      [](double t) { return std::min(1.0, 2.0 / (1.0 + std::sqrt(std::abs(t)))); }, rule);
  const double tail = std::exp(-z * span) / (z * kSqrtPi * std::pow(span, 0.25));
  return {positive.value + negative, reference, positive.error_estimate + tail,
          positive.converged};
}

SampledSignal SampledSignal::from_field(const Field& f) {
  f.validate();
  return {f.grid.x_min, f.grid.spacing(), f.values};
}

void validate(const Signal& sig) {
  if (const auto* g = std::get_if<GaussianSignal>(&sig)) {
    if (!(g->rate > 0.0)) throw std::invalid_argument("signal: Gaussian rate must be > 0");
    return;
  }
  const auto& s = std::get<SampledSignal>(sig);
  if (s.values.size() < 2) throw std::invalid_argument("signal: need at least two samples");
  if (!(s.spacing > 0.0)) throw std::invalid_argument("signal: spacing must be > 0");
}

std::complex<double> gabor_direct(const Signal& sig, double tau, double omega) {
  validate(sig);
  auto kernel = [tau, omega](double t) {
    return std::exp(std::complex<double>(-kPi * (t - tau) * (t - tau), -omega * t));
  };
  if (const auto* g = std::get_if<GaussianSignal>(&sig)) {
    if (g->amplitude == 0.0) return 0.0;
    const double c = g->center;
    const double a = g->rate;
    // Centre the sinh-sinh map on the product's peak.
    const double mid = (a * c + kPi * tau) / (a + kPi);
    const auto q = integrate_complex(
        [&](double s) {
          const double t = mid + s;
          return g->amplitude * std::exp(-a * (t - c) * (t - c)) * kernel(t);
        },
        QuadratureSpec::whole_line(1e-14));
    if (!q.converged) throw std::runtime_error("gabor_direct: quadrature did not converge");
    return q.value;
  }
  const auto& s = std::get<SampledSignal>(sig);
  CompensatedSum<std::complex<double>> acc;
  const std::size_t n = s.values.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double t = s.t0 + static_cast<double>(i) * s.spacing;
    const double w = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
    acc.add(w * s.values[i] * kernel(t));
  }
  return s.spacing * acc.value();
}

std::complex<double> gabor_gaussian_exact(const GaussianSignal& sig, double tau, double omega) {
  const double a = sig.rate;
  const double c = sig.center;
  const double p = a + kPi;
  const std::complex<double> b(2.0 * a * c + 2.0 * kPi * tau, -omega);
  const std::complex<double> e = b * b / (4.0 * p) - a * c * c - kPi * tau * tau;
  return sig.amplitude * std::sqrt(kPi / p) * std::exp(e);
}

std::vector<std::complex<double>> gabor_moments(const Signal& sig, double tau, int truncation) {
  validate(sig);
  if (truncation < 0) throw std::invalid_argument("gabor_moments: N >= 0");
  std::vector<std::complex<double>> out(static_cast<std::size_t>(truncation) + 1);
  if (const auto* g = std::get_if<GaussianSignal>(&sig)) {
    // Shifted Gaussian moments: sqrt(pi/a) H_n(c - tau, 1/(4a)).
    const double norm = g->amplitude * std::sqrt(kPi / g->rate);
    for (int n = 0; n <= truncation; ++n) {
      out[static_cast<std::size_t>(n)] =
          norm * hermite2(n, g->center - tau, 1.0 / (4.0 * g->rate));
    }
    return out;
  }
  const auto& s = std::get<SampledSignal>(sig);
  std::vector<CompensatedSum<std::complex<double>>> acc(out.size());
  const std::size_t count = s.values.size();
  for (std::size_t i = 0; i < count; ++i) {
    const double d = s.t0 + static_cast<double>(i) * s.spacing - tau;
    const double w = (i == 0 || i + 1 == count) ? 0.5 : 1.0;
    double power = 1.0;
    for (std::size_t n = 0; n < out.size(); ++n) {
      acc[n].add(w * power * s.values[i]);
      power *= d;
    }
  }
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = s.spacing * acc[n].value();
  return out;
}

bool gabor_series_converges(const Signal& sig) {
  if (const auto* g = std::get_if<GaussianSignal>(&sig)) return g->rate > kPi;
  return true;
}

SeriesResult<std::complex<double>> gabor_series(const Signal& sig, double tau, double omega,
                                                int truncation) {
  const auto moments = gabor_moments(sig, tau, truncation);
  std::vector<std::complex<double>> terms(moments.size());
  std::complex<double> phase = 1.0;  // (-i)^n
  for (int n = 0; n <= truncation; ++n) {
    const long double coeff = hermite_m_ld(2, n, omega, kPi) / factorial_ld(n);
    terms[static_cast<std::size_t>(n)] =
        phase * static_cast<double>(coeff) * moments[static_cast<std::size_t>(n)];
    phase *= std::complex<double>(0.0, -1.0);
  }
  auto sum = sum_all<std::complex<double>>(terms);
  sum.value *= std::exp(std::complex<double>(0.0, -omega * tau));
  return sum;
}

}  // namespace umbracal
