#include "umbracal/heat.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "umbracal/airy.hpp"
#include "umbracal/fft.hpp"
#include "umbracal/parallel.hpp"
#include "umbracal/polynomials.hpp"
#include "umbracal/quadrature.hpp"
#include "umbracal/special.hpp"
#include "umbracal/umbral.hpp"

namespace umbracal {
namespace {

// i^m as (re, im).
std::complex<double> i_power(int m) {
  switch (m % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

// Ai(t) is below 4e-11 past this point and its tail integral below 1e-11.
constexpr double kAiryUpperCut = 10.5;

}  // namespace

void EvolutionSpec::validate() const {
  if (m < 2) throw std::invalid_argument("evolution: m must be >= 2");
  if (sign != 1 && sign != -1) throw std::invalid_argument("evolution: sign must be +1 or -1");
  if (!std::isfinite(y)) throw std::invalid_argument("evolution: y must be finite");
}

bool EvolutionSpec::ill_posed() const { return sign * y * i_power(m).real() > 0.0; }

double band_edge_gain(const Grid& grid, const EvolutionSpec& spec) {
  grid.validate();
  spec.validate();
  const double k_max = std::numbers::pi * grid.n / grid.length();
  const double exponent = spec.sign * spec.y * i_power(spec.m).real() * std::pow(k_max, spec.m);
  return std::exp(std::max(0.0, exponent));
}

Field evolve_spectral(const Field& f, const EvolutionSpec& spec, const SpectralOptions& options) {
  f.validate();
  spec.validate();
  if (spec.ill_posed() && !options.allow_illposed) {
    throw IllPosedError("evolution is ill-posed in this direction (sign * y * Re(i^m) > 0); "
                        "the multiplier grows without bound in k");
  }
  if (options.check_support) {
    double peak = 0.0;
    for (const auto& v : f.values) peak = std::max(peak, std::abs(v));
    const double edge = std::max(std::abs(f.values.front()), std::abs(f.values.back()));
    if (edge > 1e-12 * peak) {
      throw std::invalid_argument("evolve_spectral: data is not negligible at the grid edges");
    }
  }
  Field out = f;
  if (spec.y == 0.0) return out;
  fft(out.values);
  const int n = f.grid.n;
  const double dk = 2.0 * std::numbers::pi / f.grid.length();
  const std::complex<double> im = i_power(spec.m);
  for (int j = 0; j < n; ++j) {
    const double k = dk * signed_frequency(j, n);
    const double km = std::pow(k, spec.m);
    const double scale = spec.sign * spec.y * km;
    // exp(scale * i^m) with the real and imaginary parts kept separate.
    const std::complex<double> mult =
        std::exp(scale * im.real()) * std::complex<double>(std::cos(scale * im.imag()),
                                                           std::sin(scale * im.imag()));
    out.values[static_cast<std::size_t>(j)] *= mult;
  }
  inverse_fft(out.values);
  return out;
}

std::complex<double> interpolate_cubic(const Field& f, double x) {
  const Grid& g = f.grid;
  const double margin = 0.25 * g.length();
  if (!(x >= g.x_min - margin && x <= g.x_max + margin)) {
    throw std::out_of_range("interpolate_cubic: point outside the padded domain");
  }
  const double h = g.spacing();
  const double pos = (x - g.x_min) / h;
  const long i = static_cast<long>(std::floor(pos));
  const double s = pos - static_cast<double>(i);
  const double w[4] = {
      -s * (s - 1.0) * (s - 2.0) / 6.0,
      (s + 1.0) * (s - 1.0) * (s - 2.0) / 2.0,
      -(s + 1.0) * s * (s - 2.0) / 2.0,
      (s + 1.0) * s * (s - 1.0) / 6.0,
  };
  std::complex<double> sum = 0.0;
  for (int k = 0; k < 4; ++k) {
    const long idx = i - 1 + k;
    if (idx < 0 || idx >= g.n) continue;
    sum += w[k] * f.values[static_cast<std::size_t>(idx)];
  }
  return sum;
}

Field evolve_airy(const Field& f, double y) {
  f.validate();
  if (y == 0.0 || !std::isfinite(y)) throw std::invalid_argument("evolve_airy: y must be non-zero");
  const Grid& grid = f.grid;
  const double h = grid.spacing();
  const double c = std::cbrt(3.0 * y);

  // Support of g, widened by one cell for the interpolation stencil.
  double peak = 0.0;
  for (const auto& v : f.values) peak = std::max(peak, std::abs(v));
  Field out{grid, std::vector<std::complex<double>>(f.values.size())};
  if (peak == 0.0) return out;
  int first = 0;
  while (std::abs(f.values[static_cast<std::size_t>(first)]) <= 1e-17 * peak) ++first;
  int last = grid.n - 1;
  while (std::abs(f.values[static_cast<std::size_t>(last)]) <= 1e-17 * peak) --last;
  const double u_lo = grid.node(first) - h;
  const double u_hi = grid.node(last) + h;

  // t-range for node x: u = x + c t in [u_lo, u_hi], and t <= kAiryUpperCut.
  auto t_range = [&](double x) {
    const double a = (u_lo - x) / c;
    const double b = (u_hi - x) / c;
    return std::pair{std::min(a, b), std::min(std::max(a, b), kAiryUpperCut)};
  };
  const auto r0 = t_range(grid.node(0));
  const auto r1 = t_range(grid.node(grid.n - 1));
  const double t_lo = std::min(r0.first, r1.first);
  const double t_hi = std::max(r0.second, r1.second);
  if (t_lo < -kAiryEnvelope) throw std::domain_error("evolve_airy: kernel range exceeds the Airy envelope");
  if (!(t_lo < t_hi)) return out;

  // One panel partition shared by all nodes, so Ai is evaluated once per
  // quadrature point. Panels resolve both the Airy oscillation and g.
  const GaussRule rule = gauss_legendre_rule(16);
  const double g_width = 2.0 * h / std::abs(c);
  std::vector<double> edges{t_lo};
  while (edges.back() < t_hi) {
    const double t = edges.back();
    edges.push_back(t + std::min({1.0, 2.0 / (1.0 + std::sqrt(std::abs(t))), g_width}));
  }
  const std::size_t panels = edges.size() - 1;
  const std::size_t q = rule.nodes.size();
  std::vector<double> nodes(panels * q);
  std::vector<double> weights(panels * q);
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = 0.5 * (edges[p] + edges[p + 1]);
    const double half = 0.5 * (edges[p + 1] - edges[p]);
    for (std::size_t i = 0; i < q; ++i) {
      const double t = mid + half * rule.nodes[i];
      nodes[p * q + i] = t;
      weights[p * q + i] = half * rule.weights[i] * airy(t);
    }
  }

  const double zero_lo = grid.x_min - 2.0 * h;
  const double zero_hi = grid.x_max + 2.0 * h;
  parallel_for(static_cast<std::size_t>(grid.n), [&](std::size_t i) {
    const double x = grid.node(static_cast<int>(i));
    const auto [a, b] = t_range(x);
    if (!(a < b)) return;
    const auto first_edge = std::upper_bound(edges.begin(), edges.end(), a);
    const auto last_edge = std::lower_bound(edges.begin(), edges.end(), b);
    const std::size_t p_begin =
        static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, first_edge - edges.begin() - 1));
    const std::size_t p_end = std::min<std::size_t>(
        panels, static_cast<std::size_t>(last_edge - edges.begin()));
    CompensatedSum<std::complex<double>> acc;
    for (std::size_t k = p_begin * q; k < p_end * q; ++k) {
      const double u = x + c * nodes[k];
      if (u <= zero_lo || u >= zero_hi) continue;  // interpolant is exactly zero
      acc.add(weights[k] * interpolate_cubic(f, u));
    }
    out.values[i] = acc.value();
  });
  return out;
}

double evolve_monomial(int m, int n, double x, double y) { return hermite_m(m, n, x, y); }

long double PolyGaussian::derivative(int k, double x) const {
  if (k < 0) throw std::invalid_argument("PolyGaussian: derivative order < 0");
  // P^{(i)}(x) for i = 0..k.
  const int degree = static_cast<int>(coefficients.size()) - 1;
  auto poly_derivative = [&](int i) {
    long double sum = 0.0L;
    for (int d = degree; d >= i; --d) {
      sum = sum * x + coefficients[static_cast<std::size_t>(d)] * factorial_ld(d) / factorial_ld(d - i);
    }
    return sum;
  };
  if (is_polynomial()) return poly_derivative(k);
  // Leibniz rule with d^j e^{-a x^2} = H_j(-2 a x, -a) e^{-a x^2}.
  CompensatedSum<long double> acc;
  for (int j = std::max(0, k - degree); j <= k; ++j) {
    const long double binom = factorial_ld(k) / (factorial_ld(j) * factorial_ld(k - j));
    acc.add(binom * poly_derivative(k - j) * hermite_m_ld(2, j, -2.0L * rate * x, -rate));
  }
  return acc.value() * std::exp(-static_cast<long double>(rate) * x * x);
}

std::function<SeriesResult<double>(double)> evolve_gw_quartic(const PolyGaussian& f, double y,
                                                              int truncation, double budget) {
  if (truncation < 0) throw std::invalid_argument("evolve_gw_quartic: N >= 0");
  if (f.rate < 0.0) throw std::invalid_argument("evolve_gw_quartic: Gaussian rate must be >= 0");
  if (f.coefficients.empty()) throw std::invalid_argument("evolve_gw_quartic: empty polynomial");
  const int degree = static_cast<int>(f.coefficients.size()) - 1;
  const int count = f.is_polynomial() ? degree / 4 : truncation;
  return [f, y, count, budget](double x) {
    const DeferredRoot root{UmbraId{2}, y};
    // Gaussian moments leave sum_j f^{(2j)}(x) (y^{1/2} u)^j / j!; only even
    // j survive projection, giving f^{(4i)} y^i / i!.
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(count) + 1);
    for (int i = 0; i <= count; ++i) {
      const int j = 2 * i;
      const double coeff = static_cast<double>(f.derivative(2 * j, x) / factorial_ld(j));
      const UmbralPoly term = UmbralPoly::monomial(UmbraId{2}, 2 * j, coeff);
      terms.push_back(project(term, std::span(&root, 1)).real());
    }
    if (f.is_polynomial()) return sum_all<double>(terms);
    const auto result = sum_to_smallest_term<double>(terms);
    if (result.last_term > budget * std::max(1.0, std::abs(result.value))) {
      throw TruncationBudgetError("evolve_gw_quartic: smallest series term exceeds the budget");
    }
    return result;
  };
}

}  // namespace umbracal
