#pragma once

#include <cmath>
#include <complex>

namespace umbracal {

/// Lanczos approximation (g = 607/128, 15 terms). Uses the reflection formula
/// below 1/2; throws std::domain_error at the poles 0, -1, -2, ...
double gamma(double x);

/// log|Gamma(x)|, same approximation.
double log_gamma(double x);

/// Gamma(a + n) for a in (0, 1] and integer n >= 0, as a long double product
/// on top of a single Lanczos evaluation at a + 1. Keeps half-integer and
/// sixth-integer arguments accurate well past the double overflow point.
long double gamma_shifted(double a, int n);

/// n! as the correctly rounded long double; 0 <= n <= 1754.
long double factorial_ld(int n);

/// n! as double; 0 <= n <= 170 (171! overflows).
double factorial(int n);

inline constexpr int kMaxDoubleFactorial = 170;
inline constexpr int kMaxLongDoubleFactorial = 1754;

/// Neumaier (improved Kahan-Babuska) summation.
template <class T>
class CompensatedSum {
 public:
  void add(T v) {
    const T t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  T value() const { return sum_ + comp_; }

 private:
  T sum_{};
  T comp_{};
};

template <class T>
class CompensatedSum<std::complex<T>> {
 public:
  void add(std::complex<T> v) {
    re_.add(v.real());
    im_.add(v.imag());
  }
  std::complex<T> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum<T> re_;
  CompensatedSum<T> im_;
};

}  // namespace umbracal
