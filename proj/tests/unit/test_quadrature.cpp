#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "umbracal/quadrature.hpp"

namespace umbracal {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(DoubleExponential, GaussianOverTheLine) {
  const auto r = integrate([](double x) { return std::exp(-x * x); }, QuadratureSpec::whole_line());
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, std::sqrt(kPi), 1e-12);
}

TEST(DoubleExponential, ExponentialOverHalfLine) {
  const auto r = integrate([](double x) { return std::exp(-x); }, QuadratureSpec::half_line(0.0));
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 1.0, 1e-12);
}

TEST(DoubleExponential, ShiftedGaussian) {
  const double a = 2.0, b = 1.0;
  const auto r = integrate([&](double x) { return std::exp(-a * x * x + b * x); }, QuadratureSpec::whole_line());
  EXPECT_NEAR(r.value, std::sqrt(kPi / a) * std::exp(b * b / (4 * a)), 1e-12);
}

TEST(DoubleExponential, EndpointSingularity) {
  const auto r = integrate([](double x) { return 1.0 / std::sqrt(x); }, QuadratureSpec::finite(0.0, 1.0));
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 2.0, 1e-12);
}

TEST(DoubleExponential, ComplexIntegrand) {
  // int e^{-x^2} e^{i w x} dx = sqrt(pi) e^{-w^2/4}
  const double w = 1.3;
  const auto r = integrate_complex(
      [&](double x) { return std::exp(-x * x) * std::complex<double>(std::cos(w * x), std::sin(w * x)); },
      QuadratureSpec::whole_line());
  EXPECT_NEAR(r.value.real(), std::sqrt(kPi) * std::exp(-w * w / 4), 1e-12);
  EXPECT_NEAR(r.value.imag(), 0.0, 1e-14);
}

TEST(DoubleExponential, RejectsBadSpecs) {
  auto one = [](double) { return 1.0; };
  EXPECT_THROW(integrate(one, QuadratureSpec::finite(1.0, 0.0)), std::invalid_argument);
  EXPECT_THROW(integrate(one, QuadratureSpec::half_line(-INFINITY)), std::invalid_argument);
  EXPECT_THROW(integrate(one, QuadratureSpec::gauss_hermite(0)), std::invalid_argument);
}

TEST(GaussRules, LegendreIsExactForOddDegree) {
  const auto rule = gauss_legendre_rule(8);
  for (int k = 0; k <= 15; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * std::pow(rule.nodes[i], k);
    const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
    EXPECT_NEAR(s, exact, 1e-14) << "k=" << k;
  }
}

TEST(GaussRules, HermiteMoments) {
  const auto rule = gauss_hermite_rule(20);
  double m0 = 0.0, m4 = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    m0 += rule.weights[i];
    m4 += rule.weights[i] * std::pow(rule.nodes[i], 4);
  }
  EXPECT_NEAR(m0, std::sqrt(kPi), 1e-13);
  EXPECT_NEAR(m4, 0.75 * std::sqrt(kPi), 1e-13);
  const auto r = integrate([](double x) { return std::cos(x); }, QuadratureSpec::gauss_hermite(40));
  EXPECT_NEAR(r.value, std::sqrt(kPi) * std::exp(-0.25), 1e-14);
}

TEST(GaussRules, Panels) {
  const auto rule = gauss_legendre_rule(16);
  const double v = integrate_panels<double>([](double x) { return std::sin(x); }, 0.0, kPi,
                                            [](double) { return 0.5; }, rule);
  EXPECT_NEAR(v, 2.0, 1e-14);
}

}  // namespace
}  // namespace umbracal
