#pragma once

// Finite umbral polynomials.
//
// A term is coeff * prod_u u^{e_u}, where each umbra u is the order-m Hermite
// umbra (m >= 2) acting on its own vacuum, and e_u is a non-negative multiple
// of 1/2. Ordinary variables are bound to numbers before the algebra is built,
// so coefficients are plain complex numbers.
//
// Projection replaces u^{e} by the Hermite number h_m(e) and multiplies the
// factors of distinct umbrae (independent vacua).

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "umbracal/numbers.hpp"

namespace umbracal {

struct UmbraId {
  int order = 2;
  friend constexpr auto operator<=>(UmbraId, UmbraId) = default;
};

/// Exponent key: (order, halves) pairs sorted by order, zero exponents omitted.
class UmbralKey {
 public:
  UmbralKey() = default;
  UmbralKey(UmbraId u, int halves);

  std::span<const std::pair<int, int>> factors() const { return factors_; }
  int halves_of(UmbraId u) const;
  bool is_constant() const { return factors_.empty(); }

  friend UmbralKey operator*(const UmbralKey& a, const UmbralKey& b);
  friend auto operator<=>(const UmbralKey&, const UmbralKey&) = default;
  friend bool operator==(const UmbralKey&, const UmbralKey&) = default;

 private:
  std::vector<std::pair<int, int>> factors_;
};

class UmbralPoly {
 public:
  using Coeff = std::complex<double>;
  using TermMap = std::map<UmbralKey, Coeff>;

  UmbralPoly() = default;
  static UmbralPoly constant(Coeff c);
  static UmbralPoly monomial(UmbraId u, int halves, Coeff coeff);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of a key, zero if absent.
  Coeff coefficient(const UmbralKey& key) const;

  UmbralPoly& operator+=(const UmbralPoly& other);
  UmbralPoly& operator-=(const UmbralPoly& other);
  UmbralPoly& operator*=(Coeff scalar);

  friend UmbralPoly operator+(UmbralPoly a, const UmbralPoly& b) { return a += b; }
  friend UmbralPoly operator-(UmbralPoly a, const UmbralPoly& b) { return a -= b; }
  friend UmbralPoly operator*(UmbralPoly a, Coeff s) { return a *= s; }
  friend UmbralPoly operator*(Coeff s, UmbralPoly a) { return a *= s; }
  friend UmbralPoly operator*(const UmbralPoly& a, const UmbralPoly& b);

  friend bool operator==(const UmbralPoly&, const UmbralPoly&) = default;

 private:
  void accumulate(const UmbralKey& key, Coeff c);
  TermMap terms_;
};

/// a^n by repeated squaring; a^0 is the constant 1.
UmbralPoly pow(const UmbralPoly& a, unsigned n);

/// sum_{k=0}^{N} p^k / k!
UmbralPoly umbral_exp(const UmbralPoly& p, int truncation);

/// An umbra whose coefficient root is left symbolic: the polynomial was built
/// with u standing for value^{1/order} * u. Projection then produces integer
/// powers of value for every surviving term, so negative values are allowed
/// whenever only integer moments survive.
struct DeferredRoot {
  UmbraId umbra;
  double value = 1.0;
};

/// Replaces every umbral factor by its Hermite number and sums the terms with
/// compensated summation. Throws UnsupportedIndexError for half-integer
/// exponents on umbrae of order >= 4, and std::domain_error when a deferred
/// root would need a real root of a negative value.
std::complex<double> project(const UmbralPoly& p,
                             std::span<const DeferredRoot> roots = {});

}  // namespace umbracal
