#include <cmath>
#include <numbers>

#include <boost/math/special_functions/airy.hpp>
#include <gtest/gtest.h>

#include "umbracal/airy.hpp"

namespace umbracal {
namespace {

// Absolute error scaled by the size of Ai near t: relative on the decaying
// side, against the |t|^{-1/4} envelope on the oscillating side.
double scale(double t) {
  return t > 0 ? std::abs(boost::math::airy_ai(t)) : std::pow(1.0 + std::abs(t), -0.25) / std::sqrt(std::numbers::pi);
}

TEST(Airy, AgainstBoost) {
  for (double t = -60.0; t <= 40.0; t += 0.0625) {
    EXPECT_NEAR(airy(t), boost::math::airy_ai(t), 2e-10 * scale(t)) << t;
  }
}

TEST(Airy, DerivativeAgainstBoost) {
  for (double t = -30.0; t <= 20.0; t += 0.125) {
    const double ref = boost::math::airy_ai_prime(t);
    const double s = t > 0 ? std::abs(ref) : std::pow(1.0 + std::abs(t), 0.25);
    EXPECT_NEAR(airy_prime(t), ref, 2e-10 * s) << t;
    const auto p = airy_pair(t);
    EXPECT_EQ(p.ai, airy(t));
    EXPECT_EQ(p.aip, airy_prime(t));
  }
}

TEST(Airy, ValueAtZero) {
  EXPECT_NEAR(airy(0.0), std::pow(3.0, -2.0 / 3.0) / std::tgamma(2.0 / 3.0), 1e-15);
  EXPECT_NEAR(airy(0.0), 0.3550280539, 1e-10);
}

TEST(Airy, ContinuousAtCrossovers) {
  for (double c : {kAiryMaclaurinLower, kAiryMaclaurinUpper}) {
    const double below = airy(std::nextafter(c, -INFINITY));
    const double above = airy(std::nextafter(c, INFINITY));
    EXPECT_NEAR(below, above, 2e-10 * scale(c));
  }
}

TEST(Airy, DecayAndEnvelope) {
  EXPECT_GT(airy(10.0), 0.0);
  EXPECT_LT(airy(10.0), 1e-9);
  EXPECT_EQ(airy(200.0), 0.0);
  EXPECT_THROW(airy(-2.0 * kAiryEnvelope), std::domain_error);
  EXPECT_THROW(airy(NAN), std::domain_error);
  EXPECT_NO_THROW(airy(-kAiryEnvelope));
}

}  // namespace
}  // namespace umbracal
