#include <cmath>

#include <gtest/gtest.h>

#include "umbracal/lacunary.hpp"
#include "umbracal/polynomials.hpp"

namespace umbracal {
namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

TEST(Lacunary, TrivialArguments) {
  for (double x : {-1.0, 0.3, 1.0}) {
    EXPECT_EQ(lacunary_direct(x, 0.15, 0.0).value, 1.0);
    EXPECT_EQ(lacunary_umbral(x, 0.15, 0.0).value, 1.0);
  }
  EXPECT_NEAR(lacunary_umbral(0.0, 0.0, 0.17).value, 1.0, 1e-15);
}

TEST(Lacunary, ZeroYIsCubicExponential) {
  for (double x : {-1.0, -0.4, 0.5, 1.0}) {
    for (double t : {-0.2, 0.1, 0.2}) {
      const double ref = std::exp(t * x * x * x);
      EXPECT_NEAR(lacunary_direct(x, 0.0, t).value, ref, 1e-14);
      EXPECT_NEAR(lacunary_factored(x, 0.0, t).value, ref, 1e-14);
      EXPECT_NEAR(lacunary_factored(x, 0.0, t, kDefaultLacunaryTerms, FactoredMode::kPowersOfT).value, ref, 1e-14);
    }
  }
}

TEST(Lacunary, RoutesAgreeInsideTheRegion) {
  for (double x : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
    for (double y : {-0.2, 0.0, 0.2}) {
      for (double t : {-0.2, 0.0, 0.2}) {
        const double d = lacunary_direct(x, y, t).value;
        EXPECT_LT(rel(lacunary_umbral(x, y, t).value, d), 1e-8) << x << " " << y << " " << t;
        EXPECT_LT(rel(lacunary_factored(x, y, t, kDefaultLacunaryTerms, FactoredMode::kPowersOfT).value, d), 1e-8) << x << " " << y << " " << t;
      }
    }
  }
  const double d = lacunary_direct(1.0, -0.2, -0.1).value;
  EXPECT_LT(rel(lacunary_factored(1.0, -0.2, -0.1, kDefaultLacunaryTerms, FactoredMode::kPowersOfT).value, d), 1e-8);
}

TEST(Lacunary, FigureSweepRoutesAgree) {
  for (int i = -20; i <= 20; ++i) {
    const double x = 0.05 * i;
    EXPECT_LT(std::abs(lacunary_umbral(x, -0.2, -0.1).value - lacunary_factored(x, -0.2, -0.1).value), 1e-6) << x;
    EXPECT_LT(std::abs(lacunary_direct(x, -0.2, -0.1).value - lacunary_umbral(x, -0.2, -0.1).value), 1e-6) << x;
  }
}

TEST(Lacunary, OriginReduction) {
  // At x = 0 only y^r t^{2r/3}-type products survive; routes still agree.
  for (double y : {-0.2, 0.1}) {
    for (double t : {-0.1, 0.15}) {
      EXPECT_LT(rel(lacunary_factored(0.0, y, t).value, lacunary_direct(0.0, y, t).value), 1e-8);
    }
  }
}

TEST(Lacunary, CoefficientsAreLacunaryHermite) {
  for (double x : {-0.9, 0.4}) {
    for (double y : {-0.3, 0.25}) {
      const auto c = lacunary_umbral_coefficients(x, y, 6);
      ASSERT_EQ(c.size(), 7u);
      for (int r = 0; r <= 6; ++r) {
        const double h = hermite2(3 * r, x, y);
        EXPECT_NEAR(c[static_cast<std::size_t>(r)], h, 1e-10 * std::max(1.0, std::abs(h)));
      }
    }
  }
}

TEST(Lacunary, SmallestTermMovesOutAsTShrinks) {
  const int wide = lacunary_direct(1.0, 0.2, 0.2).terms_used;
  const int narrow = lacunary_direct(1.0, 0.2, 0.05).terms_used;
  EXPECT_GE(narrow, 10);
  EXPECT_GT(narrow, wide);
}

TEST(Lacunary, DispatcherMatchesRoutes) {
  EXPECT_EQ(lacunary(LacunaryRoute::kDirect, 0.3, 0.1, -0.1).value, lacunary_direct(0.3, 0.1, -0.1).value);
  EXPECT_EQ(lacunary(LacunaryRoute::kUmbral, 0.3, 0.1, -0.1).value, lacunary_umbral(0.3, 0.1, -0.1).value);
  EXPECT_EQ(lacunary(LacunaryRoute::kFactored, 0.3, 0.1, -0.1).value, lacunary_factored(0.3, 0.1, -0.1).value);
}

TEST(Lacunary, TruncationLimits) {
  EXPECT_THROW(lacunary_direct(0.0, 0.0, 0.1, kMaxLacunaryTerms + 1), std::invalid_argument);
  EXPECT_THROW(lacunary_direct(0.0, 0.0, 0.1, -1), std::invalid_argument);
}

}  // namespace
}  // namespace umbracal
