#include "umbracal/quadrature.hpp"

#include <numbers>

namespace umbracal {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

}  // namespace

namespace detail {

void validate(const QuadratureSpec& spec) {
  switch (spec.scheme) {
    case QuadratureScheme::kGaussHermite:
      if (spec.gauss_hermite_nodes < 1) {
        throw std::invalid_argument("Gauss-Hermite needs at least one node");
      }
      return;
    case QuadratureScheme::kTanhSinh:
      if (!(std::isfinite(spec.lower) && std::isfinite(spec.upper) &&
            spec.lower < spec.upper)) {
        throw std::invalid_argument("tanh-sinh needs finite lower < upper");
      }
      break;
    case QuadratureScheme::kExpSinh:
      if (!std::isfinite(spec.lower)) {
        throw std::invalid_argument("exp-sinh needs a finite lower bound");
      }
      break;
    case QuadratureScheme::kSinhSinh:
      break;
  }
  if (!(spec.target_tol > 0.0)) throw std::invalid_argument("target_tol must be > 0");
  if (spec.max_levels < 3) throw std::invalid_argument("max_levels must be >= 3");
}

DeRange de_default_range(QuadratureScheme scheme) {
  switch (scheme) {
    case QuadratureScheme::kTanhSinh:
      return {-4.0, 4.0};
    case QuadratureScheme::kExpSinh:
      return {-5.0, 4.0};
    default:
      return {-4.0, 4.0};
  }
}

DeNode de_node(const QuadratureSpec& spec, double t) {
  const double u = kHalfPi * std::sinh(t);
  const double du = kHalfPi * std::cosh(t);
  DeNode node;
  switch (spec.scheme) {
    case QuadratureScheme::kTanhSinh: {
      const double a = spec.lower;
      const double b = spec.upper;
      const double len = b - a;
      // Distance to the nearer endpoint, computed without cancellation.
      const double gap = len / (1.0 + std::exp(2.0 * std::abs(u)));
      node.x = t < 0.0 ? a + gap : b - gap;
      const double c = std::cosh(u);
      node.w = len * du / (2.0 * c * c);
      node.valid = node.x > a && node.x < b;
      if (t == 0.0) node.valid = true;
      return node;
    }
    case QuadratureScheme::kExpSinh: {
      const double e = std::exp(u);
      node.x = spec.lower + e;
      node.w = e * du;
      node.valid = node.x > spec.lower && std::isfinite(node.x);
      return node;
    }
    case QuadratureScheme::kSinhSinh: {
      node.x = std::sinh(u);
      node.w = std::cosh(u) * du;
      node.valid = std::isfinite(node.x) && std::isfinite(node.w);
      return node;
    }
    case QuadratureScheme::kGaussHermite:
      break;
  }
  throw std::logic_error("de_node: not a double-exponential scheme");
}

}  // namespace detail

GaussRule gauss_legendre_rule(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre_rule: n >= 1");
  GaussRule rule{std::vector<double>(static_cast<std::size_t>(n)),
                 std::vector<double>(static_cast<std::size_t>(n))};
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged root for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    if (n == 1) p0 = 1.0;
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return rule;
}

GaussRule gauss_hermite_rule(int n) {
  if (n < 1) throw std::invalid_argument("gauss_hermite_rule: n >= 1");
  GaussRule rule{std::vector<double>(static_cast<std::size_t>(n)),
                 std::vector<double>(static_cast<std::size_t>(n))};
  // Newton iteration on the orthonormal Hermite recurrence with the usual
  // asymptotic starting guesses for the largest roots.
  const double pim4 = std::pow(std::numbers::pi, -0.25);
  const int half = (n + 1) / 2;
  double z = 0.0;
  for (int i = 0; i < half; ++i) {
    if (i == 0) {
      z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
    } else if (i == 1) {
      z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * rule.nodes[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * rule.nodes[1];
    } else {
      z = 2.0 * z - rule.nodes[static_cast<std::size_t>(i - 2)];
    }
    double pp = 0.0;
    for (int iter = 0; iter < 200; ++iter) {
      double p1 = pim4;
      double p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = z;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = -z;
    rule.weights[static_cast<std::size_t>(i)] = 2.0 / (pp * pp);
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = 2.0 / (pp * pp);
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

}  // namespace umbracal
