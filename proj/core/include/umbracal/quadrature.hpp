#pragma once

// Double-exponential quadrature on finite intervals (tanh-sinh), half lines
// (exp-sinh) and the whole line (sinh-sinh), plus Gauss-Hermite and
// Gauss-Legendre rules.
//
// The DE schemes map t in [t_lo, t_hi] to x and sum h * w(t) * f(x(t)) on a
// grid that halves h every level, reusing all previous nodes. The range is
// fixed at level 0 by scanning outward from t = 0 and stopping at t_max, at a
// node that collapses onto a finite endpoint, or at the first non-finite
// contribution. Error estimate = |S_k - S_{k-1}|; convergence requires it to
// fall below target_tol * (integral of |f|), and the outermost retained
// contributions to be below the same bound.

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "umbracal/special.hpp"

namespace umbracal {

enum class QuadratureScheme {
  kTanhSinh,      // [lower, upper]
  kExpSinh,       // [lower, +inf)
  kSinhSinh,      // (-inf, +inf)
  kGaussHermite,  // integral of e^{-x^2} f(x) over the real line
};

struct QuadratureSpec {
  QuadratureScheme scheme = QuadratureScheme::kTanhSinh;
  double lower = 0.0;
  double upper = 1.0;
  double target_tol = 1e-12;
  int max_levels = 10;
  int gauss_hermite_nodes = 64;

  static QuadratureSpec finite(double a, double b, double tol = 1e-12) {
    return {QuadratureScheme::kTanhSinh, a, b, tol, 10, 0};
  }
  static QuadratureSpec half_line(double a, double tol = 1e-12) {
    return {QuadratureScheme::kExpSinh, a, INFINITY, tol, 10, 0};
  }
  static QuadratureSpec whole_line(double tol = 1e-12) {
    return {QuadratureScheme::kSinhSinh, -INFINITY, INFINITY, tol, 10, 0};
  }
  static QuadratureSpec gauss_hermite(int nodes) {
    return {QuadratureScheme::kGaussHermite, -INFINITY, INFINITY, 0.0, 0, nodes};
  }
};

template <class T>
struct QuadratureResult {
  T value{};
  double error_estimate = 0.0;
  double l1_norm = 0.0;
  int evaluations = 0;
  int levels = 0;
  bool converged = false;
};

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1].
GaussRule gauss_legendre_rule(int n);

/// n-point Gauss-Hermite rule for weight e^{-x^2}.
GaussRule gauss_hermite_rule(int n);

namespace detail {

struct DeNode {
  double x = 0.0;
  double w = 0.0;
  bool valid = false;  // false once x collapses onto a finite endpoint
};

struct DeRange {
  double t_min;
  double t_max;
};

DeRange de_default_range(QuadratureScheme scheme);
DeNode de_node(const QuadratureSpec& spec, double t);
void validate(const QuadratureSpec& spec);

template <class T>
bool finite_value(const T& v) {
  if constexpr (std::is_floating_point_v<T>) {
    return std::isfinite(v);
  } else {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  }
}

}  // namespace detail

template <class T, class F>
QuadratureResult<T> integrate_as(F&& f, const QuadratureSpec& spec) {
  detail::validate(spec);
  QuadratureResult<T> out;

  if (spec.scheme == QuadratureScheme::kGaussHermite) {
    auto estimate = [&](int n, double& l1) {
      const GaussRule rule = gauss_hermite_rule(n);
      T sum{};
      l1 = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const T v = static_cast<T>(f(rule.nodes[i]));
        sum += rule.weights[i] * v;
        l1 += rule.weights[i] * std::abs(v);
      }
      return sum;
    };
    double l1_coarse = 0.0;
    const int n = spec.gauss_hermite_nodes;
    out.value = estimate(n, out.l1_norm);
    const T coarse = estimate(std::max(1, (3 * n) / 4), l1_coarse);
    out.error_estimate = std::abs(out.value - coarse);
    out.evaluations = n + std::max(1, (3 * n) / 4);
    out.converged = detail::finite_value(out.value);
    return out;
  }

  const detail::DeRange range = detail::de_default_range(spec.scheme);
  constexpr double h0 = 0.5;

  // Level 0: scan outward to fix [j_lo, j_hi] in units of h0.
  T sum{};
  double l1 = 0.0;
  double edge_lo = 0.0;
  double edge_hi = 0.0;
  auto contribution = [&](double t, T& value, double& weight_abs) -> bool {
    const detail::DeNode node = detail::de_node(spec, t);
    if (!node.valid) return false;
    if (node.w == 0.0) {
      value = T{};
      weight_abs = 0.0;
      return true;
    }
    const T fv = static_cast<T>(f(node.x));
    ++out.evaluations;
    value = node.w * fv;
    weight_abs = std::abs(value);
    return detail::finite_value(value);
  };

  {
    T v{};
    double a = 0.0;
    if (!contribution(0.0, v, a)) {
      out.value = T{NAN};
      return out;
    }
    sum += v;
    l1 += a;
  }
  int j_hi = 0;
  for (int j = 1; j * h0 <= range.t_max; ++j) {
    T v{};
    double a = 0.0;
    if (!contribution(j * h0, v, a)) break;
    sum += v;
    l1 += a;
    edge_hi = a;
    j_hi = j;
  }
  int j_lo = 0;
  for (int j = 1; -j * h0 >= range.t_min; ++j) {
    T v{};
    double a = 0.0;
    if (!contribution(-j * h0, v, a)) break;
    sum += v;
    l1 += a;
    edge_lo = a;
    j_lo = -j;
  }
  const double t_lo = j_lo * h0;
  const double t_hi = j_hi * h0;

  T estimate = h0 * sum;
  double h = h0;
  bool finite = true;
  for (int level = 1; level <= spec.max_levels; ++level) {
    h *= 0.5;
    T added{};
    double added_l1 = 0.0;
    const long steps = std::lround((t_hi - t_lo) / h);
    for (long i = 1; i < steps; i += 2) {
      const double t = t_lo + static_cast<double>(i) * h;
      T v{};
      double a = 0.0;
      if (!contribution(t, v, a)) {
        finite = false;
        break;
      }
      added += v;
      added_l1 += a;
    }
    if (!finite) break;
    sum += added;
    l1 += added_l1;
    const T next = h * sum;
    out.error_estimate = std::abs(next - estimate);
    estimate = next;
    out.levels = level;
    out.l1_norm = h * l1;
    const double bound = spec.target_tol * out.l1_norm;
    const double edge = h * std::max(edge_lo, edge_hi);
    if (level >= 3 && out.error_estimate <= bound && edge <= bound) {
      out.converged = true;
      break;
    }
  }
  out.value = finite ? estimate : T{NAN};
  if (!finite) out.converged = false;
  return out;
}

/// Real-valued integrand.
template <class F>
QuadratureResult<double> integrate(F&& f, const QuadratureSpec& spec) {
  return integrate_as<double>(std::forward<F>(f), spec);
}

/// Complex-valued integrand.
template <class F>
QuadratureResult<std::complex<double>> integrate_complex(F&& f, const QuadratureSpec& spec) {
  return integrate_as<std::complex<double>>(std::forward<F>(f), spec);
}

/// Composite Gauss-Legendre rule on [a, b]: panels of width
/// min(width_at(t), b - t) starting at t = a. Suits oscillatory integrands
/// whose local wavelength is known.
template <class T, class F, class W>
T integrate_panels(F&& f, double a, double b, W&& width_at, const GaussRule& rule) {
  CompensatedSum<T> acc;
  double t = a;
  while (t < b) {
    const double w = std::min(width_at(t), b - t);
    if (!(w > 0.0)) throw std::invalid_argument("integrate_panels: non-positive panel width");
    const double mid = t + 0.5 * w;
    T panel{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      panel += rule.weights[i] * static_cast<T>(f(mid + 0.5 * w * rule.nodes[i]));
    }
    acc.add(0.5 * w * panel);
    t += w;
  }
  return acc.value();
}

}  // namespace umbracal
