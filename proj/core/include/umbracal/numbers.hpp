#pragma once

// Hermite numbers of order m:
//
//   h_m(r) = r! / (r/m)!   if m divides r,
//          = 0             otherwise.
//
// m = 2 gives 1, 0, 2, 0, 12, 0, 120, ...; m = 3 gives 1, 0, 0, 6, 0, 0, 360, ...
// Integer indices are exact. Half-integer indices (needed for the square root
// of the order-2 umbra) go through the gamma function with the circular
// selector |cos(r pi / 2)| (m = 2) or 2|cos(r pi / 3)| - |cos(r pi)| (m = 3).

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace umbracal {

using BigInt = boost::multiprecision::cpp_int;

/// A non-negative multiple of 1/2, stored as a count of halves.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  constexpr explicit HalfInteger(int halves) : halves_(halves) {}
  static constexpr HalfInteger integer(int r) { return HalfInteger(2 * r); }

  constexpr int halves() const { return halves_; }
  constexpr bool is_integer() const { return halves_ % 2 == 0; }
  /// Integer part; only meaningful when is_integer().
  constexpr int as_integer() const { return halves_ / 2; }
  constexpr double value() const { return 0.5 * halves_; }

  friend constexpr bool operator==(HalfInteger, HalfInteger) = default;

 private:
  int halves_ = 0;
};

/// Raised when a fractional index is requested for an order without a
/// fractional extension (m >= 4).
class UnsupportedIndexError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct HermiteNumberTable {
  int order = 2;
  std::vector<BigInt> values;

  const BigInt& operator[](std::size_t r) const { return values.at(r); }
  std::size_t size() const { return values.size(); }
};

/// Exact h_m(r). Throws std::invalid_argument for m < 2 or r < 0.
BigInt hermite_number(int m, int r);

/// Table of h_m(0..r_max) via values[km] = values[(k-1)m] * ((k-1)m+1 ... km) / k.
HermiteNumberTable build_table(int m, int r_max);

/// Gamma-function route, valid at integer and (for m in {2,3}) half-integer
/// indices. Integer indices use the divisibility selector so that non-multiples
/// of m are exactly zero. Throws UnsupportedIndexError for m >= 4 with a
/// half-integer index.
double hermite_number_fractional(int m, HalfInteger rho);

/// Umbral moment used by projection: exact product route for integer indices,
/// shifted-gamma products for half-integers. Long double so that large indices
/// stay finite when multiplied by small coefficients.
long double hermite_moment(int m, HalfInteger rho);

}  // namespace umbracal
