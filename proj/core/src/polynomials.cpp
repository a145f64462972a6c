#include "umbracal/polynomials.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "umbracal/numbers.hpp"
#include "umbracal/special.hpp"
#include "umbracal/umbral.hpp"

namespace umbracal {
namespace {

void check_degree(int n) {
  if (n < 0) throw std::invalid_argument("polynomial degree must be >= 0");
  if (n > kMaxLongDoubleFactorial) {
    throw std::out_of_range("polynomial degree exceeds factorial table (1754)");
  }
}

long double ipow(long double x, int k) { return k == 0 ? 1.0L : std::pow(x, k); }

}  // namespace

int PolyFamilyId::arity() const {
  switch (kind) {
    case PolyKind::kTwoVariable:
    case PolyKind::kOrderM:
      return 2;
    case PolyKind::kThirdOrder3Var:
      return 3;
    case PolyKind::kMultiVariable:
      return m;
  }
  return 0;
}

PolyFamilyId parse_family(std::string_view name, int m) {
  if (name == "2var") return {PolyKind::kTwoVariable, 2};
  if (name == "3var3") return {PolyKind::kThirdOrder3Var, 3};
  if (m < 2) throw std::invalid_argument("family order m must be >= 2");
  if (name == "m-order") return {PolyKind::kOrderM, m};
  if (name == "multivar") return {PolyKind::kMultiVariable, m};
  throw std::invalid_argument("unknown polynomial family '" + std::string(name) + "'");
}

long double hermite_m_ld(int m, int n, long double x, long double y) {
  if (m < 2) throw std::invalid_argument("hermite_m: order must be >= 2");
  check_degree(n);
  const long double nf = factorial_ld(n);
  CompensatedSum<long double> acc;
  for (int r = 0; m * r <= n; ++r) {
    const int k = n - m * r;
    acc.add(nf / (factorial_ld(r) * factorial_ld(k)) * ipow(x, k) * ipow(y, r));
  }
  return acc.value();
}

double hermite2(int n, double x, double y) {
  return static_cast<double>(hermite_m_ld(2, n, x, y));
}

double hermite_m(int m, int n, double x, double y) {
  return static_cast<double>(hermite_m_ld(m, n, x, y));
}

double hermite3_3var(int n, double x, double y, double z) {
  check_degree(n);
  const long double nf = factorial_ld(n);
  CompensatedSum<long double> acc;
  for (int r = 0; 3 * r <= n; ++r) {
    const int k = n - 3 * r;
    acc.add(hermite_m_ld(2, k, x, y) * nf / (factorial_ld(k) * factorial_ld(r)) *
            ipow(z, r));
  }
  return static_cast<double>(acc.value());
}

double hermite_multivar(int n, std::span<const double> xs, RootHandling roots) {
  check_degree(n);
  if (xs.empty()) throw std::invalid_argument("hermite_multivar: need x_1");
  UmbralPoly base = UmbralPoly::constant(xs[0]);
  std::vector<DeferredRoot> deferred;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const int s = static_cast<int>(i) + 1;
    const UmbraId u{s};
    if (roots == RootHandling::kDeferred) {
      base += UmbralPoly::monomial(u, 2, 1.0);
      deferred.push_back({u, xs[i]});
      continue;
    }
    if (xs[i] < 0.0 && s % 2 == 0) {
      throw std::domain_error("hermite_multivar: even root of negative x_" +
                              std::to_string(s));
    }
    const double root = xs[i] < 0.0 ? -std::pow(-xs[i], 1.0 / s)
                                    : std::pow(xs[i], 1.0 / s);
    base += UmbralPoly::monomial(u, 2, root);
  }
  return project(pow(base, static_cast<unsigned>(n)), deferred).real();
}

double multinomial_expansion(int n, double x, double y, double z) {
  check_degree(n);
  if (y < 0.0) throw std::domain_error("multinomial_expansion: needs y >= 0");
  const long double sy = std::sqrt(static_cast<long double>(y));
  const long double cz = std::cbrt(static_cast<long double>(z));
  const long double nf = factorial_ld(n);
  CompensatedSum<long double> acc;
  for (int k3 = 0; k3 <= n; ++k3) {
    const long double h3 = hermite_moment(3, HalfInteger::integer(k3));
    if (h3 == 0.0L) continue;
    for (int k2 = 0; k2 + k3 <= n; ++k2) {
      const long double h2 = hermite_moment(2, HalfInteger::integer(k2));
      if (h2 == 0.0L) continue;
      const int k1 = n - k2 - k3;
      acc.add(nf / (factorial_ld(k1) * factorial_ld(k2) * factorial_ld(k3)) *
              ipow(x, k1) * ipow(sy, k2) * h2 * ipow(cz, k3) * h3);
    }
  }
  return static_cast<double>(acc.value());
}

double dgauss_poly(int n, double x) { return hermite2(n, 2.0 * x, 1.0) * std::exp(x * x); }

double dcubic_poly(int n, double x) {
  return hermite3_3var(n, -3.0 * x * x, -3.0 * x, -1.0) * std::exp(-x * x * x);
}

SeriesResult<double> dseries(int n, double x, int truncation, int sign) {
  if (n < 0 || truncation < 0) throw std::invalid_argument("dseries: n, N >= 0");
  if (sign != 1 && sign != -1) throw std::invalid_argument("dseries: sign is +1 or -1");
  if (n + truncation > kMaxLongDoubleFactorial) {
    throw std::out_of_range("dseries: n + N exceeds factorial table");
  }
  const int order = sign > 0 ? 2 : 3;
  const long double arg = sign > 0 ? x : -x;
  std::vector<double> terms(static_cast<std::size_t>(truncation) + 1);
  long double power = 1.0L;  // arg^s / s!
  for (int s = 0; s <= truncation; ++s) {
    if (s > 0) power *= arg / s;
    terms[static_cast<std::size_t>(s)] = static_cast<double>(
        hermite_moment(order, HalfInteger::integer(s + n)) * power);
  }
  auto result = sum_all<double>(terms);
  if (sign < 0 && n % 2 == 1) result.value = -result.value;
  return result;
}

double evaluate(const PolyFamilyId& family, int n, std::span<const double> args) {
  if (static_cast<int>(args.size()) != family.arity()) {
    throw std::invalid_argument("wrong number of arguments for polynomial family");
  }
  switch (family.kind) {
    case PolyKind::kTwoVariable:
      return hermite2(n, args[0], args[1]);
    case PolyKind::kOrderM:
      return hermite_m(family.m, n, args[0], args[1]);
    case PolyKind::kThirdOrder3Var:
      return hermite3_3var(n, args[0], args[1], args[2]);
    case PolyKind::kMultiVariable:
      return hermite_multivar(n, args);
  }
  throw std::logic_error("unhandled polynomial family");
}

}  // namespace umbracal
