#include <cmath>

#include <gtest/gtest.h>

#include "umbracal/umbral.hpp"

namespace umbracal {
namespace {

const UmbraId h2{2};
const UmbraId h3{3};

TEST(UmbralPoly, Monomials) {
  const auto a = UmbralPoly::monomial(h2, 2, 3.0);
  EXPECT_EQ(a.size(), 1u);
  EXPECT_EQ(a.coefficient(UmbralKey(h2, 2)), UmbralPoly::Coeff(3.0));
  const auto b = UmbralPoly::monomial(h3, 6, 1.0);
  EXPECT_EQ(b.terms().begin()->first.halves_of(h3), 6);
  const auto c = UmbralPoly::monomial(h2, 1, 1.0);
  EXPECT_EQ(c.terms().begin()->first.halves_of(h2), 1);
}

TEST(UmbralPoly, BinomialSquare) {
  const auto base = UmbralPoly::constant(1.0) + UmbralPoly::monomial(h2, 2, 1.0);
  const auto sq = pow(base, 2);
  EXPECT_EQ(sq.size(), 3u);
  EXPECT_EQ(sq.coefficient(UmbralKey()), UmbralPoly::Coeff(1.0));
  EXPECT_EQ(sq.coefficient(UmbralKey(h2, 2)), UmbralPoly::Coeff(2.0));
  EXPECT_EQ(sq.coefficient(UmbralKey(h2, 4)), UmbralPoly::Coeff(1.0));
  EXPECT_EQ(pow(base, 0), UmbralPoly::constant(1.0));
}

TEST(UmbralPoly, MixedKey) {
  const auto p = UmbralPoly::monomial(h2, 2, 1.0) * UmbralPoly::monomial(h3, 2, 1.0);
  ASSERT_EQ(p.size(), 1u);
  const auto& key = p.terms().begin()->first;
  EXPECT_EQ(key.halves_of(h2), 2);
  EXPECT_EQ(key.halves_of(h3), 2);
  EXPECT_EQ(key.factors().size(), 2u);
}

TEST(UmbralPoly, CancellationRemovesTerms) {
  const auto a = UmbralPoly::monomial(h2, 2, 1.0);
  EXPECT_TRUE((a - a).is_zero());
}

TEST(Project, SecondOrderPolynomial) {
  const DeferredRoot root{h2, 3.0};
  const auto p = pow(UmbralPoly::constant(2.0) + UmbralPoly::monomial(h2, 2, 1.0), 2);
  EXPECT_NEAR(project(p, std::span(&root, 1)).real(), 10.0, 1e-14);
}

TEST(Project, NegativeDeferredValue) {
  const DeferredRoot root{h2, -0.7};
  const auto p = pow(UmbralPoly::constant(1.5) + UmbralPoly::monomial(h2, 2, 1.0), 4);
  // x^4 + 12 x^2 y + 12 y^2
  const double x = 1.5, y = -0.7;
  EXPECT_NEAR(project(p, std::span(&root, 1)).real(), x * x * x * x + 12 * x * x * y + 12 * y * y, 1e-13);
}

TEST(Project, PowersGiveHermiteNumbers) {
  for (int r = 0; r <= 8; ++r) {
    EXPECT_EQ(project(UmbralPoly::monomial(h2, 2 * r, 1.0)).real(),
              static_cast<double>(hermite_number(2, r)));
  }
  EXPECT_EQ(project(UmbralPoly::constant(4.25)), UmbralPoly::Coeff(4.25));
}

TEST(Project, IndependentUmbrae) {
  const auto p = UmbralPoly::monomial(h2, 4, 1.0) * UmbralPoly::monomial(h3, 6, 1.0);
  EXPECT_EQ(project(p).real(), 2.0 * 6.0);
}

TEST(Project, HalfExponentOnHighOrderThrows) {
  EXPECT_THROW(project(UmbralPoly::monomial(UmbraId{4}, 1, 1.0)), UnsupportedIndexError);
}

TEST(UmbralExp, Zero) {
  EXPECT_EQ(project(umbral_exp(UmbralPoly{}, 10)), UmbralPoly::Coeff(1.0));
}

TEST(UmbralExp, GaussianAndQuartic) {
  // e^{i u x} projects to e^{-x^2}; with x^2 in place of x it gives e^{-x^4}.
  for (double x : {0.5, 1.0, 1.3}) {
    const auto lin = umbral_exp(UmbralPoly::monomial(h2, 2, {0.0, x}), 60);
    EXPECT_NEAR(project(lin).real(), std::exp(-x * x), 1e-12) << x;
    const auto quad = umbral_exp(UmbralPoly::monomial(h2, 2, {0.0, x * x}), 60);
    EXPECT_NEAR(project(quad).real(), std::exp(-x * x * x * x), 1e-12) << x;
  }
  const auto at1 = umbral_exp(UmbralPoly::monomial(h2, 2, {0.0, 1.0}), 40);
  EXPECT_NEAR(project(at1).real(), std::exp(-1.0), 1e-12);
}

}  // namespace
}  // namespace umbracal
