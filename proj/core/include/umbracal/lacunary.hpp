#pragma once

// Triple-lacunary generating function
//
//   L(x, y, t) = sum_r t^r H_{3r}(x, y) / r!
//
// evaluated three ways. The series is asymptotic (H_{3r} grows faster than
// r!), so every route stops at its smallest term.
//
//   direct:   the sum above with explicit H_{3r}.
//   umbral:   projection of e^{t (x + sqrt(y) u)^3} for the order-2 umbra u,
//             sqrt(y) kept symbolic so negative y is fine.
//   factored: 3E(x, y, t) e^{t x^3}, where
//             3E = sum_q y^q / q! H_{2q}^{(3)}(3x^2 t, 3x t, t).
//             kPowersOfY sums 3E in powers of y; kPowersOfT expands 3E in
//             powers of t by the multinomial theorem and forms the Cauchy
//             product with e^{t x^3}.

#include <vector>

#include "umbracal/series.hpp"

namespace umbracal {

inline constexpr int kDefaultLacunaryTerms = 120;

/// Largest truncation accepted by the routes (keeps (3R)! representable).
inline constexpr int kMaxLacunaryTerms = 200;

enum class LacunaryRoute { kDirect, kUmbral, kFactored };

enum class FactoredMode { kPowersOfY, kPowersOfT };

SeriesResult<double> lacunary_direct(double x, double y, double t,
                                     int truncation = kDefaultLacunaryTerms);

/// r! * (coefficient of t^r) = projection of (x + sqrt(y) u)^{3r}, r = 0..R.
std::vector<double> lacunary_umbral_coefficients(double x, double y, int truncation);

SeriesResult<double> lacunary_umbral(double x, double y, double t,
                                     int truncation = kDefaultLacunaryTerms);

SeriesResult<double> lacunary_factored(double x, double y, double t,
                                       int truncation = kDefaultLacunaryTerms,
                                       FactoredMode mode = FactoredMode::kPowersOfY);

/// Dispatch by route; the factored route uses kPowersOfY.
SeriesResult<double> lacunary(LacunaryRoute route, double x, double y, double t,
                              int truncation = kDefaultLacunaryTerms);

}  // namespace umbracal
