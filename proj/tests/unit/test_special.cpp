#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "umbracal/special.hpp"

namespace umbracal {
namespace {

TEST(Gamma, AgainstStdTgamma) {
  for (double x : {0.1, 0.25, 0.5, 2.0 / 3.0, 1.0, 1.5, 3.7, 10.25, 25.0, 100.5, -0.5, -2.3}) {
    const double ref = std::tgamma(x);
    EXPECT_NEAR(umbracal::gamma(x), ref, 1e-13 * std::abs(ref)) << x;
  }
  EXPECT_NEAR(umbracal::gamma(0.5), std::sqrt(std::numbers::pi), 1e-15);
}

TEST(Gamma, LogGammaAgainstStd) {
  for (double x : {0.3, 1.0, 7.5, 150.0, 1000.0}) EXPECT_NEAR(log_gamma(x), std::lgamma(x), 1e-12 * std::max(1.0, std::abs(std::lgamma(x))));
}

TEST(Gamma, Shifted) {
  EXPECT_NEAR(static_cast<double>(gamma_shifted(0.5, 3)), std::tgamma(3.5), 1e-14);
  EXPECT_NEAR(static_cast<double>(gamma_shifted(1.0 / 3.0, 40)), std::tgamma(40.0 + 1.0 / 3.0),
              1e-13 * std::tgamma(40.0 + 1.0 / 3.0));
  // Past the double range: log matches lgamma.
  EXPECT_NEAR(static_cast<double>(std::log(gamma_shifted(0.5, 300))), std::lgamma(300.5),
              1e-12 * std::lgamma(300.5));
}

TEST(Factorials, Values) {
  EXPECT_EQ(factorial(0), 1.0);
  EXPECT_EQ(factorial(5), 120.0);
  EXPECT_NEAR(factorial(20), 2432902008176640000.0, 1.0);
  EXPECT_NEAR(static_cast<double>(factorial_ld(170) / factorial_ld(169)), 170.0, 1e-12);
}

TEST(CompensatedSum, RecoversSmallTerms) {
  CompensatedSum<double> acc;
  acc.add(1.0);
  for (int i = 0; i < 1000; ++i) acc.add(1e-16);
  acc.add(-1.0);
  EXPECT_NEAR(acc.value(), 1e-13, 1e-20);  // a plain sum returns 0
}

}  // namespace
}  // namespace umbracal
