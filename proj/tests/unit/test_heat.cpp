#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>

#include <gtest/gtest.h>

#include "umbracal/heat.hpp"
#include "umbracal/polynomials.hpp"

namespace umbracal {
namespace {

Field gaussian(const Grid& g) {
  return Field::sample(g, [](double x) { return std::complex<double>(std::exp(-x * x)); });
}

TEST(EvolutionSpec, Validation) {
  EXPECT_THROW((EvolutionSpec{1, 1.0, 1}.validate()), std::invalid_argument);
  EXPECT_THROW((EvolutionSpec{2, 1.0, 0}.validate()), std::invalid_argument);
  EXPECT_THROW((EvolutionSpec{2, NAN, 1}.validate()), std::invalid_argument);
}

TEST(EvolutionSpec, IllPosedDirections) {
  EXPECT_FALSE((EvolutionSpec{2, 1.0, 1}.ill_posed()));
  EXPECT_TRUE((EvolutionSpec{2, -1.0, 1}.ill_posed()));
  EXPECT_TRUE((EvolutionSpec{4, 1.0, 1}.ill_posed()));
  EXPECT_FALSE((EvolutionSpec{4, 1.0, -1}.ill_posed()));
  EXPECT_FALSE((EvolutionSpec{3, 1.0, 1}.ill_posed()));
  EXPECT_FALSE((EvolutionSpec{3, -1.0, 1}.ill_posed()));
}

TEST(Spectral, HeatClosedForm) {
  const Grid g{-20.0, 20.0, 2048};
  for (double y : {0.25, 1.0}) {
    const Field out = evolve_spectral(gaussian(g), {2, y, 1});
    const Field ref = Field::sample(g, [y](double x) {
      return std::complex<double>(std::exp(-x * x / (1 + 4 * y)) / std::sqrt(1 + 4 * y));
    });
    EXPECT_LT(sup_distance(out, ref), 1e-8);
  }
  const Field at1 = evolve_spectral(gaussian(g), {2, 1.0, 1});
  EXPECT_NEAR(at1.values[1024].real(), 1.0 / std::sqrt(5.0), 1e-12);
}

TEST(Spectral, ZeroTimeIsIdentity) {
  const Grid g{-20.0, 20.0, 512};
  const Field f = gaussian(g);
  EXPECT_LT(sup_distance(evolve_spectral(f, {3, 0.0, 1}), f), 1e-13);
}

TEST(Spectral, SemigroupAndMean) {
  const Grid g{-40.0, 40.0, 2048};
  const Field f = gaussian(g);
  for (const EvolutionSpec s : {EvolutionSpec{2, 0.3, 1}, EvolutionSpec{3, 0.3, 1}, EvolutionSpec{4, 0.3, -1}}) {
    const Field two = evolve_spectral(evolve_spectral(f, s), {s.m, 0.5, s.sign}, {false, false});
    const Field one = evolve_spectral(f, {s.m, 0.8, s.sign});
    EXPECT_LT(sup_distance(two, one), 1e-10) << s.m;
    EXPECT_NEAR(std::abs(one.mean() - f.mean()), 0.0, 1e-16) << s.m;
  }
}

TEST(Spectral, IllPosedNeedsOptIn) {
  const Grid g{-20.0, 20.0, 256};
  EXPECT_THROW(evolve_spectral(gaussian(g), {4, 1.0, 1}), IllPosedError);
  EXPECT_NO_THROW(evolve_spectral(gaussian(g), {4, 1e-6, 1}, {true, true}));
  EXPECT_GT(band_edge_gain(g, {4, 1.0, 1}), kAliasingGain);
  EXPECT_EQ(band_edge_gain(g, {4, 1.0, -1}), 1.0);
}

TEST(Spectral, RejectsDataAtTheEdge) {
  const Grid g{-2.0, 2.0, 64};
  EXPECT_THROW(evolve_spectral(gaussian(g), {2, 0.1, 1}), std::invalid_argument);
  EXPECT_NO_THROW(evolve_spectral(gaussian(g), {2, 0.1, 1}, {false, false}));
}

TEST(Airy, MatchesSpectral) {
  const Grid g{-204.8, 204.8, 8192};
  const Field f = gaussian(g);
  for (double y : {0.1, 0.5}) {
    EXPECT_LT(sup_distance(evolve_airy(f, y), evolve_spectral(f, {3, y, 1})), 1e-4) << y;
  }
}

TEST(Airy, SmallTimeLimit) {
  const Grid g{-10.0, 10.0, 256};
  const Field f = gaussian(g);
  EXPECT_LT(sup_distance(evolve_airy(f, 1e-6), f), 1e-4);
  EXPECT_THROW(evolve_airy(f, 0.0), std::invalid_argument);
}

TEST(Airy, IndependentOfThreadCount) {
  const Grid g{-51.2, 51.2, 1024};
  const Field f = gaussian(g);
  setenv("UMBRACAL_THREADS", "1", 1);
  const Field a = evolve_airy(f, 0.3);
  setenv("UMBRACAL_THREADS", "5", 1);
  const Field b = evolve_airy(f, 0.3);
  unsetenv("UMBRACAL_THREADS");
  EXPECT_EQ(a.values, b.values);
}

TEST(Interpolation, CubicIsExactForCubics) {
  const Grid g{-1.0, 1.0, 32};
  auto p = [](double x) { return 0.5 - x + 2 * x * x - 0.75 * x * x * x; };
  const Field f = Field::sample(g, [&](double x) { return std::complex<double>(p(x)); });
  for (double x : {-0.9, -0.333, 0.01, 0.5, 0.87}) EXPECT_NEAR(interpolate_cubic(f, x).real(), p(x), 1e-14);
  EXPECT_EQ(interpolate_cubic(f, -1.4).real(), 0.0);
  EXPECT_THROW(interpolate_cubic(f, 1.6), std::out_of_range);
}

TEST(HeatPolynomials, HandExpansions) {
  for (double x : {-1.0, 0.3, 2.0}) {
    for (double y : {-0.5, 0.7}) {
      EXPECT_NEAR(evolve_monomial(2, 2, x, y), x * x + 2 * y, 1e-14);
      EXPECT_NEAR(evolve_monomial(3, 3, x, y), x * x * x + 6 * y, 1e-13);
      EXPECT_NEAR(evolve_monomial(5, 4, x, y), std::pow(x, 4), 1e-13);
    }
  }
}

TEST(HeatPolynomials, WindowedMonomialInterior) {
  const Grid g{-32.0, 32.0, 1024};
  for (int m : {2, 3}) {
    for (int n = 0; n <= 6; ++n) {
      const Field f = Field::sample(g, [n](double x) {
        return std::complex<double>(std::pow(x, n) * 0.5 * std::erfc(std::abs(x) - 8.0));
      });
      const Field out = evolve_spectral(f, {m, 0.02, 1});
      for (int i = 0; i < g.n; ++i) {
        const double x = g.node(i);
        if (std::abs(x) > 1.5) continue;
        EXPECT_NEAR(out.values[static_cast<std::size_t>(i)].real(), evolve_monomial(m, n, x, 0.02), 1e-6)
            << m << " " << n << " " << x;
      }
    }
  }
}

TEST(QuarticGw, Polynomials) {
  const PolyGaussian x4{{0, 0, 0, 0, 1}, 0.0};
  const PolyGaussian lin{{0, 1}, 0.0};
  for (double y : {-0.3, 0.0, 0.7}) {
    const auto f = evolve_gw_quartic(x4, y, 10);
    const auto g = evolve_gw_quartic(lin, y, 10);
    for (double x : {-1.2, 0.0, 0.5}) {
      EXPECT_NEAR(f(x).value, std::pow(x, 4) + 24 * y, 1e-13);
      EXPECT_NEAR(f(x).value, hermite_m(4, 4, x, y), 1e-13);
      EXPECT_NEAR(g(x).value, x, 1e-15);
    }
  }
}

TEST(QuarticGw, GaussianAgainstSpectral) {
  const Grid g{-20.0, 20.0, 1024};
  const PolyGaussian gauss{{1.0}, 1.0};
  const double y = -1e-4;
  const Field ref = evolve_spectral(gaussian(g), {4, -y, -1});
  const auto f = evolve_gw_quartic(gauss, y, 30);
  for (int i = 384; i < 640; i += 16) {
    EXPECT_NEAR(f(g.node(i)).value, ref.values[static_cast<std::size_t>(i)].real(), 1e-10);
  }
}

TEST(QuarticGw, BudgetRejectsDivergentTruncation) {
  const PolyGaussian gauss{{1.0}, 1.0};
  const auto f = evolve_gw_quartic(gauss, -0.05, 30);
  EXPECT_THROW(f(0.0), TruncationBudgetError);
}

}  // namespace
}  // namespace umbracal
