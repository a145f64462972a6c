#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "umbracal/numbers.hpp"
#include "umbracal/polynomials.hpp"

namespace umbracal {
namespace {

const std::vector<double> kPoints{-1.7, -0.4, 0.0, 0.3, 1.1, 2.5};

TEST(Hermite2, HandExpansions) {
  for (double x : kPoints) {
    for (double y : kPoints) {
      EXPECT_EQ(hermite2(0, x, y), 1.0);
      EXPECT_NEAR(hermite2(2, x, y), x * x + 2 * y, 1e-13);
      EXPECT_NEAR(hermite2(3, x, y), x * x * x + 6 * x * y, 1e-12);
    }
  }
  EXPECT_NEAR(hermite2(3, 1, 1), 7.0, 1e-14);
}

// Physicists' H_n(x) = H_n(2x, -1) obeys H_{n+1} = 2x H_n - 2n H_{n-1}.
TEST(Hermite2, MatchesThreeTermRecurrence) {
  for (double x : kPoints) {
    double prev = 1.0, cur = 2.0 * x;
    for (int n = 1; n < 20; ++n) {
      EXPECT_NEAR(hermite2(n, 2.0 * x, -1.0), cur, 1e-10 * std::max(1.0, std::abs(cur)));
      const double next = 2.0 * x * cur - 2.0 * n * prev;
      prev = cur;
      cur = next;
    }
  }
}

TEST(HermiteM, HandExpansions) {
  for (double x : kPoints) {
    for (double y : kPoints) {
      EXPECT_NEAR(hermite_m(3, 3, x, y), x * x * x + 6 * y, 1e-12);
      EXPECT_NEAR(hermite_m(4, 3, x, y), x * x * x, 1e-12);
      EXPECT_NEAR(hermite_m(4, 4, x, y), x * x * x * x + 24 * y, 1e-12);
      for (int n = 0; n <= 10; ++n) EXPECT_EQ(hermite_m(2, n, x, y), hermite2(n, x, y));
    }
  }
  EXPECT_THROW(hermite_m(1, 2, 0.0, 0.0), std::invalid_argument);
  EXPECT_THROW(hermite_m(2, -1, 0.0, 0.0), std::invalid_argument);
}

// Appell property: d/dx H_n = n H_{n-1}.
TEST(HermiteM, AppellDerivative) {
  for (int m = 2; m <= 5; ++m) {
    for (int n = 1; n <= 10; ++n) {
      const double x = 0.7, y = -0.3, h = 1e-5;
      const double fd = (hermite_m(m, n, x + h, y) - hermite_m(m, n, x - h, y)) / (2 * h);
      EXPECT_NEAR(fd, n * hermite_m(m, n - 1, x, y), 1e-6 * std::max(1.0, std::abs(fd)));
    }
  }
}

TEST(Hermite3Var, Reductions) {
  for (double x : kPoints) {
    for (double y : kPoints) {
      const double z = 0.9;
      EXPECT_NEAR(hermite3_3var(3, x, y, z), x * x * x + 6 * x * y + 6 * z, 1e-12);
      EXPECT_EQ(hermite3_3var(0, x, y, z), 1.0);
      for (int n = 0; n <= 8; ++n) {
        EXPECT_NEAR(hermite3_3var(n, x, y, 0.0), hermite2(n, x, y), 1e-11 * std::max(1.0, std::abs(hermite2(n, x, y))));
      }
    }
  }
}

TEST(HermiteMultivar, Reductions) {
  const std::vector<double> xyz{0.4, 1.3, -0.6};
  EXPECT_NEAR(hermite_multivar(3, xyz), 0.064 + 6 * 0.4 * 1.3 - 3.6, 1e-12);
  EXPECT_NEAR(hermite_multivar(3, xyz), hermite3_3var(3, 0.4, 1.3, -0.6), 1e-12);
  const std::vector<double> xy{0.4, -1.3};
  for (int n = 0; n <= 8; ++n) EXPECT_NEAR(hermite_multivar(n, xy), hermite2(n, 0.4, -1.3), 1e-11);
  const std::vector<double> four{0.8, 1.0, 2.0, -3.0};
  EXPECT_EQ(hermite_multivar(1, four), 0.8);
  EXPECT_THROW(hermite_multivar(2, xy, RootHandling::kRealRoots), std::domain_error);
}

TEST(MultinomialExpansion, SurvivingTerms) {
  for (double x : kPoints) {
    EXPECT_NEAR(multinomial_expansion(2, x, 0.7, 1.9), x * x + 1.4, 1e-12);
    EXPECT_NEAR(multinomial_expansion(5, x, 0.0, 0.0), std::pow(x, 5), 1e-12);
  }
  EXPECT_NEAR(multinomial_expansion(3, 0.0, 0.0, 1.7), 6 * 1.7, 1e-13);
  for (int n = 0; n <= 12; ++n) {
    const double a = multinomial_expansion(n, 0.3, 0.8, -0.5);
    EXPECT_NEAR(a, hermite3_3var(n, 0.3, 0.8, -0.5), 1e-10 * std::max(1.0, std::abs(a)));
  }
}

TEST(DerivativeFamilies, GaussPoly) {
  for (double x : kPoints) EXPECT_NEAR(dgauss_poly(0, x), std::exp(x * x), 1e-12 * std::exp(x * x));
  EXPECT_NEAR(dgauss_poly(1, 1.0), 2 * std::exp(1.0), 1e-13);
  EXPECT_NEAR(dgauss_poly(2, 0.0), 2.0, 1e-14);
}

TEST(DerivativeFamilies, CubicPolyAgainstChainRule) {
  for (double x : kPoints) {
    const double e = std::exp(-x * x * x);
    EXPECT_NEAR(dcubic_poly(0, x), e, 1e-13 * e);
    EXPECT_NEAR(dcubic_poly(1, x), -3 * x * x * e, 1e-12 * std::max(1.0, e));
    EXPECT_NEAR(dcubic_poly(2, x), (9 * std::pow(x, 4) - 6 * x) * e, 1e-11 * std::max(1.0, e));
    EXPECT_NEAR(dcubic_poly(3, x), (-27 * std::pow(x, 6) + 54 * x * x * x - 6) * e, 1e-10 * std::max(1.0, e));
  }
}

TEST(DerivativeSeries, Reductions) {
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(dseries(n, 0.0, 30, 1).value, static_cast<double>(hermite_number(2, n)));
  }
  EXPECT_NEAR(dseries(0, 0.8, 80, 1).value, std::exp(0.64), 1e-13);
  EXPECT_NEAR(dseries(2, 0.5, 60, 1).value, dgauss_poly(2, 0.5), 1e-10);
  for (int n = 0; n <= 5; ++n) {
    EXPECT_NEAR(dseries(n, 0.5, 80, -1).value, dcubic_poly(n, 0.5), 1e-10) << n;
  }
  EXPECT_THROW(dseries(1, 0.5, 10, 0), std::invalid_argument);
}

TEST(Families, ParseAndEvaluate) {
  EXPECT_EQ(parse_family("2var", 2).kind, PolyKind::kTwoVariable);
  EXPECT_EQ(parse_family("m-order", 5).m, 5);
  EXPECT_EQ(parse_family("3var3", 3).arity(), 3);
  EXPECT_THROW(parse_family("bogus", 2), std::invalid_argument);
  const std::vector<double> args{1.0, 1.0};
  EXPECT_EQ(evaluate(parse_family("2var", 2), 2, args), 3.0);
  const std::vector<double> args3{0.0, 1.0};
  EXPECT_EQ(evaluate(parse_family("m-order", 3), 3, args3), 6.0);
  EXPECT_THROW(evaluate(parse_family("3var3", 3), 2, args), std::invalid_argument);
}

}  // namespace
}  // namespace umbracal
