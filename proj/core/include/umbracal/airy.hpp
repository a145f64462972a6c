#pragma once

// Airy function Ai and its derivative for real arguments.
//
// Maclaurin pair Ai = c1 f - c2 g in long double on [-8, 6]; outside, the
// large-argument expansions with optimal truncation. Ai underflows to zero
// beyond t ~ 104.

namespace umbracal {

/// t below -kAiryEnvelope is rejected; above ~105 Ai is returned as 0. Wide enough for the Airy-kernel heat solver,
/// which evaluates the kernel at (u - x) / cbrt(3y) across the whole grid.
inline constexpr double kAiryEnvelope = 1.0e4;

inline constexpr double kAiryMaclaurinLower = -8.0;
inline constexpr double kAiryMaclaurinUpper = 6.0;

/// Ai(t); throws std::domain_error for t < -kAiryEnvelope or NaN.
double airy(double t);

/// Ai'(t); same domain.
double airy_prime(double t);

struct AiryPair {
  double ai;
  double aip;
};

AiryPair airy_pair(double t);

}  // namespace umbracal
