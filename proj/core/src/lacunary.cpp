#include "umbracal/lacunary.hpp"

#include <cmath>
#include <stdexcept>

#include "umbracal/numbers.hpp"
#include "umbracal/polynomials.hpp"
#include "umbracal/special.hpp"
#include "umbracal/umbral.hpp"

namespace umbracal {
namespace {

void check_truncation(int r) {
  if (r < 0 || r > kMaxLacunaryTerms) {
    throw std::invalid_argument("lacunary: truncation must be in [0, 200]");
  }
}

long double ipow(long double x, int k) {
  long double out = 1.0L;
  for (int i = 0; i < k; ++i) out *= x;
  return out;
}

// y^{n/2} h_n for the order-2 numbers; zero for odd n.
long double scaled_moment(double y, int n) {
  if (n % 2 != 0) return 0.0L;
  return ipow(y, n / 2) * hermite_moment(2, HalfInteger::integer(n));
}

// t^k coefficient of 3E: sum over k1 + k2 + k3 = k of
//   (3x^2)^{k1} (3x)^{k2} / (k1! k2! k3!) * y^{n/2} h_n,  n = k1 + 2 k2 + 3 k3.
long double e3_t_coefficient(double x, double y, int k) {
  CompensatedSum<long double> acc;
  const long double a = 3.0L * x * x;
  const long double b = 3.0L * x;
  for (int k1 = 0; k1 <= k; ++k1) {
    for (int k2 = 0; k1 + k2 <= k; ++k2) {
      const int k3 = k - k1 - k2;
      const int n = k1 + 2 * k2 + 3 * k3;
      if (n % 2 != 0) continue;
      acc.add(ipow(a, k1) * ipow(b, k2) /
              (factorial_ld(k1) * factorial_ld(k2) * factorial_ld(k3)) * scaled_moment(y, n));
    }
  }
  return acc.value();
}

// H_0 .. H_n of the generating function e^{X s + Y s^2 + Z s^3}:
//   H_{k+1} = X H_k + 2k Y H_{k-1} + 3k(k-1) Z H_{k-2}
std::vector<long double> hermite3_sequence(long double X, long double Y, long double Z, int n) {
  std::vector<long double> h(static_cast<std::size_t>(n) + 1);
  h[0] = 1.0L;
  for (int k = 0; k < n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    long double next = X * h[i];
    if (k >= 1) next += 2.0L * k * Y * h[i - 1];
    if (k >= 2) next += 3.0L * k * (k - 1) * Z * h[i - 2];
    h[i + 1] = next;
  }
  return h;
}

}  // namespace

SeriesResult<double> lacunary_direct(double x, double y, double t, int truncation) {
  check_truncation(truncation);
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(truncation) + 1);
  long double p = 1.0L;  // t^r / r!
  for (int r = 0; r <= truncation; ++r) {
    if (r > 0) p *= static_cast<long double>(t) / r;
    terms.push_back(static_cast<double>(p * hermite_m_ld(2, 3 * r, x, y)));
  }
  return sum_to_smallest_term<double>(terms);
}

std::vector<double> lacunary_umbral_coefficients(double x, double y, int truncation) {
  check_truncation(truncation);
  const UmbraId u{2};
  const DeferredRoot root{u, y};
  const UmbralPoly base = UmbralPoly::constant(x) + UmbralPoly::monomial(u, 2, 1.0);
  const UmbralPoly cube = pow(base, 3);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(truncation) + 1);
  UmbralPoly power = UmbralPoly::constant(1.0);
  for (int r = 0; r <= truncation; ++r) {
    if (r > 0) power = power * cube;
    out.push_back(project(power, std::span(&root, 1)).real());
  }
  return out;
}

SeriesResult<double> lacunary_umbral(double x, double y, double t, int truncation) {
  const std::vector<double> c = lacunary_umbral_coefficients(x, y, truncation);
  std::vector<double> terms(c.size());
  long double p = 1.0L;
  for (std::size_t r = 0; r < c.size(); ++r) {
    if (r > 0) p *= static_cast<long double>(t) / static_cast<long double>(r);
    terms[r] = static_cast<double>(p * c[r]);
  }
  return sum_to_smallest_term<double>(terms);
}

SeriesResult<double> lacunary_factored(double x, double y, double t, int truncation,
                                       FactoredMode mode) {
  check_truncation(truncation);
  const long double tx3 = static_cast<long double>(t) * x * x * x;
  if (mode == FactoredMode::kPowersOfY) {
    const long double lx = x;
    const auto h = hermite3_sequence(3.0L * lx * lx * t, 3.0L * lx * t, t, 2 * truncation);
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(truncation) + 1);
    long double p = 1.0L;  // y^q / q!
    for (int q = 0; q <= truncation; ++q) {
      if (q > 0) p *= static_cast<long double>(y) / q;
      terms.push_back(static_cast<double>(p * h[static_cast<std::size_t>(2 * q)]));
    }
    auto e3 = sum_to_smallest_term<double>(terms);
    const double scale = static_cast<double>(std::exp(tx3));
    return {e3.value * scale, e3.terms_used, e3.last_term * scale};
  }
  // Cauchy product in t of 3E and e^{t x^3}.
  std::vector<long double> e3(static_cast<std::size_t>(truncation) + 1);
  for (int k = 0; k <= truncation; ++k) e3[static_cast<std::size_t>(k)] = e3_t_coefficient(x, y, k);
  const long double x3 = static_cast<long double>(x) * x * x;
  std::vector<double> terms;
  terms.reserve(e3.size());
  long double tr = 1.0L;
  for (int r = 0; r <= truncation; ++r) {
    if (r > 0) tr *= t;
    CompensatedSum<long double> c;
    for (int j = 0; j <= r; ++j) c.add(e3[static_cast<std::size_t>(r - j)] * ipow(x3, j) / factorial_ld(j));
    terms.push_back(static_cast<double>(tr * c.value()));
  }
  return sum_to_smallest_term<double>(terms);
}

SeriesResult<double> lacunary(LacunaryRoute route, double x, double y, double t, int truncation) {
  switch (route) {
    case LacunaryRoute::kDirect:
      return lacunary_direct(x, y, t, truncation);
    case LacunaryRoute::kUmbral:
      return lacunary_umbral(x, y, t, truncation);
    case LacunaryRoute::kFactored:
      return lacunary_factored(x, y, t, truncation);
  }
  throw std::invalid_argument("lacunary: unknown route");
}

}  // namespace umbracal
