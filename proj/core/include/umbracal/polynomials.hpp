#pragma once

// Hermite polynomial families, each evaluated by its explicit finite sum:
//
//   H_n(x, y)         = n! sum_r x^{n-2r} y^r / (r! (n-2r)!)
//   H_n^{(m)}(x, y)   = n! sum_r x^{n-mr} y^r / (r! (n-mr)!)
//   H_n^{(3)}(x,y,z)  = n! sum_r H_{n-3r}(x, y) z^r / ((n-3r)! r!)
//   H_n^{m,...,2}(x_1..x_m) = projection of (x_1 + sum_s x_s^{1/s} u_s)^n
//
// All sums run upward in r with compensated accumulation in long double.
// Factorials up to 170 fit a double; the long double tables used here are
// exact-rounded up to 1754!, which bounds n.

#include <span>
#include <string_view>

#include "umbracal/series.hpp"

namespace umbracal {

enum class PolyKind {
  kTwoVariable,       // H_n(x, y)
  kOrderM,            // H_n^{(m)}(x, y)
  kThirdOrder3Var,    // H_n^{(3)}(x, y, z)
  kMultiVariable,     // H_n^{m, m-1, ..., 2}(x_1, ..., x_m)
};

struct PolyFamilyId {
  PolyKind kind = PolyKind::kTwoVariable;
  int m = 2;

  /// Number of real arguments expected by evaluate().
  int arity() const;
};

PolyFamilyId parse_family(std::string_view name, int m);

double hermite2(int n, double x, double y);
double hermite_m(int m, int n, double x, double y);
double hermite3_3var(int n, double x, double y, double z);

long double hermite_m_ld(int m, int n, long double x, long double y);

enum class RootHandling {
  /// Keep x_s^{1/s} symbolic; only integer powers of x_s survive projection.
  kDeferred,
  /// Take real roots up front; even roots of negative values are an error.
  kRealRoots,
};

/// Non-lacunary m-variable Hermite polynomial via the umbral multinomial,
/// xs = (x_1, ..., x_m), m = xs.size() >= 1. Throws std::domain_error for a
/// negative x_s with even s under RootHandling::kRealRoots.
double hermite_multivar(int n, std::span<const double> xs,
                        RootHandling roots = RootHandling::kDeferred);

/// sum_{k1+k2+k3=n} n!/(k1! k2! k3!) x^{k1} (sqrt(y))^{k2} h_{k2}
///                   (cbrt(z))^{k3} 3h_{k3}; requires y >= 0.
double multinomial_expansion(int n, double x, double y, double z);

/// d^n/dx^n e^{x^2} = H_n(2x, 1) e^{x^2}
double dgauss_poly(int n, double x);

/// d^n/dx^n e^{-x^3} = H_n^{(3)}(-3x^2, -3x, -1) e^{-x^3}
double dcubic_poly(int n, double x);

/// Derivative series of the umbral exponentials:
///   sign = +1:  sum_{s<=N} h_{s+n} x^s / s!                 (order-2 numbers)
///   sign = -1:  (-1)^n sum_{s<=N} 3h_{s+n} (-x)^s / s!      (order-3 numbers)
SeriesResult<double> dseries(int n, double x, int truncation, int sign);

/// Dispatches on the family; args holds x, y[, z] or x_1..x_m.
double evaluate(const PolyFamilyId& family, int n, std::span<const double> args);

}  // namespace umbracal
