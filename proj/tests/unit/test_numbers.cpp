#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "umbracal/numbers.hpp"

namespace umbracal {
namespace {

BigInt big_factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

TEST(HermiteNumber, ListedValues) {
  EXPECT_EQ(hermite_number(2, 4), 12);
  EXPECT_EQ(hermite_number(3, 9), 60480);
  EXPECT_EQ(hermite_number(4, 8), 20160);
  EXPECT_EQ(hermite_number(3, 5), 0);
  for (int m = 2; m <= 7; ++m) EXPECT_EQ(hermite_number(m, 0), 1) << "m=" << m;
}

// Non-zero entries are h_{mk} = (mk)! / k!, everything else vanishes.
TEST(HermiteNumber, FactorialRatio) {
  for (int m = 2; m <= 6; ++m) {
    for (int r = 0; r <= 10 * m; ++r) {
      const BigInt expected = r % m == 0 ? big_factorial(r) / big_factorial(r / m) : BigInt(0);
      EXPECT_EQ(hermite_number(m, r), expected) << "m=" << m << " r=" << r;
    }
  }
}

TEST(HermiteNumber, LargeIndexIsExact) {
  const BigInt h = hermite_number(2, 100);
  EXPECT_EQ(h, big_factorial(100) / big_factorial(50));
  EXPECT_GT(h.str().size(), 90u);
}

TEST(HermiteNumber, RejectsBadArguments) {
  EXPECT_THROW(hermite_number(1, 2), std::invalid_argument);
  EXPECT_THROW(hermite_number(2, -1), std::invalid_argument);
  EXPECT_THROW(build_table(2, -1), std::invalid_argument);
}

TEST(BuildTable, Sequences) {
  const auto t2 = build_table(2, 6);
  const std::vector<BigInt> expected2{1, 0, 2, 0, 12, 0, 120};
  EXPECT_EQ(t2.values, expected2);
  EXPECT_EQ(build_table(4, 12).values.back(), 79833600);
  const std::vector<BigInt> expected3{1, 0, 0};
  EXPECT_EQ(build_table(3, 2).values, expected3);
  const auto t3 = build_table(3, 9);
  const std::vector<BigInt> listed3{1, 0, 0, 6, 0, 0, 360, 0, 0, 60480};
  EXPECT_EQ(t3.values, listed3);
}

TEST(HermiteNumberFractional, HalfIndex) {
  const double expected = std::tgamma(1.5) / std::tgamma(1.25) * std::cos(std::numbers::pi / 4);
  EXPECT_NEAR(hermite_number_fractional(2, HalfInteger(1)), expected, 1e-13);
  EXPECT_NEAR(expected, 0.69136, 1e-5);
}

TEST(HermiteNumberFractional, IntegerConsistency) {
  EXPECT_NEAR(hermite_number_fractional(2, HalfInteger::integer(1)), 0.0, 1e-14);
  EXPECT_NEAR(hermite_number_fractional(2, HalfInteger::integer(4)), 12.0, 1e-12);
  for (int r = 0; r <= 12; ++r) {
    const double exact = static_cast<double>(hermite_number(2, r));
    EXPECT_NEAR(hermite_number_fractional(2, HalfInteger::integer(r)), exact, 1e-12 * std::max(1.0, exact));
    EXPECT_NEAR(static_cast<double>(hermite_moment(2, HalfInteger::integer(r))), exact, 1e-12 * std::max(1.0, exact));
  }
}

TEST(HermiteNumberFractional, UnsupportedOrders) {
  EXPECT_THROW(hermite_number_fractional(4, HalfInteger(1)), UnsupportedIndexError);
  EXPECT_THROW(hermite_number_fractional(2, HalfInteger(-1)), std::invalid_argument);
}

}  // namespace
}  // namespace umbracal
