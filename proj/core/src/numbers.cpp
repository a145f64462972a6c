#include "umbracal/numbers.hpp"

#include <cmath>
#include <numbers>

#include "umbracal/special.hpp"

namespace umbracal {
namespace {

void check_order(int m) {
  if (m < 2) throw std::invalid_argument("Hermite number order must be >= 2");
}

// Selector for half-integer rho = (2j+1)/2.
//   m = 2: |cos(rho pi / 2)| = sqrt(2)/2 for every odd numerator.
//   m = 3: 2|cos(rho pi / 3)| - |cos(rho pi)|, where the second term is zero
//          and the first cycles through sqrt(3), 0, sqrt(3) with numerator mod 6.
double half_integer_selector(int m, int halves) {
  if (m == 2) return std::numbers::sqrt2 / 2.0;
  switch (halves % 6) {
    case 1:
    case 5:
      return std::numbers::sqrt3;
    default:
      return 0.0;
  }
}

}  // namespace

BigInt hermite_number(int m, int r) {
  check_order(m);
  if (r < 0) throw std::invalid_argument("Hermite number index must be >= 0");
  if (r % m != 0) return 0;
  BigInt v = 1;
  for (int j = r / m + 1; j <= r; ++j) v *= j;
  return v;
}

HermiteNumberTable build_table(int m, int r_max) {
  check_order(m);
  if (r_max < 0) throw std::invalid_argument("build_table: r_max must be >= 0");
  HermiteNumberTable table{m, std::vector<BigInt>(static_cast<std::size_t>(r_max) + 1)};
  table.values[0] = 1;
  for (int k = 1; k * m <= r_max; ++k) {
    BigInt block = 1;
    for (int j = (k - 1) * m + 1; j <= k * m; ++j) block *= j;
    table.values[static_cast<std::size_t>(k * m)] =
        table.values[static_cast<std::size_t>((k - 1) * m)] * block / k;
  }
  return table;
}

double hermite_number_fractional(int m, HalfInteger rho) {
  check_order(m);
  if (rho.halves() < 0) {
    throw std::invalid_argument("hermite_number_fractional: rho must be >= 0");
  }
  const double r = rho.value();
  double selector;
  if (rho.is_integer()) {
    selector = rho.as_integer() % m == 0 ? 1.0 : 0.0;
  } else if (m == 2 || m == 3) {
    selector = half_integer_selector(m, rho.halves());
  } else {
    throw UnsupportedIndexError(
        "hermite_number_fractional: no fractional extension for order >= 4");
  }
  if (selector == 0.0) return 0.0;
  const double num = r + 1.0;
  const double den = r / m + 1.0;
  if (num < 170.0) return gamma(num) / gamma(den) * selector;
  return std::exp(log_gamma(num) - log_gamma(den)) * selector;
}

long double hermite_moment(int m, HalfInteger rho) {
  check_order(m);
  if (rho.halves() < 0) {
    throw std::invalid_argument("hermite_moment: index must be >= 0");
  }
  if (rho.is_integer()) {
    const int r = rho.as_integer();
    if (r % m != 0) return 0.0L;
    long double v = 1.0L;
    for (int j = r / m + 1; j <= r; ++j) v *= j;
    return v;
  }
  if (m != 2 && m != 3) {
    throw UnsupportedIndexError(
        "hermite_moment: no fractional extension for order >= 4");
  }
  const double selector = half_integer_selector(m, rho.halves());
  if (selector == 0.0) return 0.0L;
  // rho + 1 = 1/2 + (j + 1) with rho = j + 1/2.
  const int j = rho.halves() / 2;
  const long double numerator = gamma_shifted(0.5, j + 1);
  // rho/m + 1 = (2j + 1)/(2m) + 1 = frac + whole with frac in (0, 1].
  const int num6 = rho.halves() + 2 * m;  // (rho/m + 1) * 2m
  const int whole = (num6 - 1) / (2 * m);
  const double frac = static_cast<double>(num6 - 2 * m * whole) / (2.0 * m);
  const long double denominator = gamma_shifted(frac, whole);
  return numerator / denominator * static_cast<long double>(selector);
}

}  // namespace umbracal
