#include "umbracal/airy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace umbracal {
namespace {

constexpr long double kAi0 = 0.355028053887817239260063186004183176L;
constexpr long double kAip0 = -0.258819403792806798405183560189203963L;
constexpr long double kPi = std::numbers::pi_v<long double>;

AiryPair maclaurin(long double t) {
  const long double t3 = t * t * t;
  long double a = 1.0L;  // t^{3k} term of f
  long double b = t;     // t^{3k+1} term of g
  long double f = a;
  long double g = b;
  long double fp = 0.0L;
  long double gp = 1.0L;
  for (int k = 1; k < 200; ++k) {
    const long double kk = 3.0L * k;
    fp += a * t * t / (kk - 1.0L);
    gp += b * t * t / kk;
    a *= t3 / ((kk - 1.0L) * kk);
    b *= t3 / (kk * (kk + 1.0L));
    f += a;
    g += b;
    if (std::abs(a) + std::abs(b) <= 1e-22L * (std::abs(f) + std::abs(g)) && k > 2) break;
  }
  return {static_cast<double>(kAi0 * f + kAip0 * g),
          static_cast<double>(kAi0 * fp + kAip0 * gp)};
}

// u_k and v_k coefficients of the large-argument expansions.
struct Coefficients {
  static constexpr int kCount = 80;
  long double u[kCount];
  long double v[kCount];
  constexpr Coefficients() : u{}, v{} {
    u[0] = 1.0L;
    v[0] = 1.0L;
    for (int k = 1; k < kCount; ++k) {
      const long double kk = k;
      u[k] = u[k - 1] * (6 * kk - 5) * (6 * kk - 3) * (6 * kk - 1) / ((2 * kk - 1) * 216 * kk);
      v[k] = -(6 * kk + 1) / (6 * kk - 1) * u[k];
    }
  }
};

constexpr Coefficients kCoef{};

// Partial sums of sum_k (-1)^k c_k / zeta^k split by parity of k, truncated
// before the terms start to grow.
struct SplitSums {
  long double even = 0.0L;  // sum_k (-1)^k c_{2k} / zeta^{2k}
  long double odd = 0.0L;   // sum_k (-1)^k c_{2k+1} / zeta^{2k+1}
  long double alternating = 0.0L;  // sum_k (-1)^k c_k / zeta^k
};

SplitSums expansion(const long double* c, long double zeta) {
  SplitSums s;
  long double prev = INFINITY;
  long double zk = 1.0L;
  for (int k = 0; k < Coefficients::kCount; ++k) {
    const long double term = std::abs(c[k]) * zk;
    if (term > prev) break;
    prev = term;
    const long double signed_term = c[k] * zk;
    s.alternating += (k % 2 == 0) ? signed_term : -signed_term;
    if (k % 2 == 0) {
      s.even += (k % 4 == 0) ? signed_term : -signed_term;
    } else {
      s.odd += ((k - 1) % 4 == 0) ? signed_term : -signed_term;
    }
    zk /= zeta;
  }
  return s;
}

AiryPair positive_asymptotic(long double t) {
  const long double root = std::sqrt(t);
  const long double zeta = 2.0L / 3.0L * t * root;
  const long double q = std::sqrt(root);  // t^{1/4}
  const long double e = std::exp(-zeta) / (2.0L * std::sqrt(kPi));
  const SplitSums su = expansion(kCoef.u, zeta);
  const SplitSums sv = expansion(kCoef.v, zeta);
  return {static_cast<double>(e / q * su.alternating),
          static_cast<double>(-e * q * sv.alternating)};
}

AiryPair negative_asymptotic(long double s) {
  const long double root = std::sqrt(s);
  const long double zeta = 2.0L / 3.0L * s * root;
  const long double q = std::sqrt(root);  // s^{1/4}
  const long double phase = zeta - kPi / 4.0L;
  const long double c = std::cos(phase);
  const long double sn = std::sin(phase);
  const SplitSums su = expansion(kCoef.u, zeta);
  const SplitSums sv = expansion(kCoef.v, zeta);
  const long double norm = 1.0L / std::sqrt(kPi);
  return {static_cast<double>(norm / q * (c * su.even + sn * su.odd)),
          static_cast<double>(norm * q * (sn * sv.even - c * sv.odd))};
}

}  // namespace

AiryPair airy_pair(double t) {
  if (std::isnan(t)) throw std::domain_error("airy: NaN argument");
  if (t > 105.0) return {0.0, 0.0};  // below the smallest subnormal
  if (t < -kAiryEnvelope) throw std::domain_error("airy: argument below -1e4");
  if (t > kAiryMaclaurinUpper) return positive_asymptotic(t);
  if (t < kAiryMaclaurinLower) return negative_asymptotic(-static_cast<long double>(t));
  return maclaurin(t);
}

double airy(double t) { return airy_pair(t).ai; }

double airy_prime(double t) { return airy_pair(t).aip; }

}  // namespace umbracal
