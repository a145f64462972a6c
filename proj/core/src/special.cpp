#include "umbracal/special.hpp"

#include <array>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace umbracal {
namespace {

constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosCoeff = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,
    .15808870322491248884e-3,   -.21026444172410488319e-3,
    .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,
    .36899182659531622704e-5};

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

// Returns (log of the leading factor, Lanczos series) for x >= 1/2.
std::pair<double, double> lanczos_parts(double x) {
  const double z = x - 1.0;
  double series = kLanczosCoeff[0];
  for (std::size_t k = 1; k < kLanczosCoeff.size(); ++k) {
    series += kLanczosCoeff[k] / (z + static_cast<double>(k));
  }
  const double t = z + kLanczosG + 0.5;
  const double log_lead =
      0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t;
  return {log_lead, series};
}

const std::vector<long double>& factorial_table() {
  static const std::vector<long double> table = [] {
    std::vector<long double> t(kMaxLongDoubleFactorial + 1);
    boost::multiprecision::cpp_int f = 1;
    t[0] = 1.0L;
    for (int n = 1; n <= kMaxLongDoubleFactorial; ++n) {
      f *= n;
      t[n] = f.convert_to<long double>();
    }
    return t;
  }();
  return table;
}

}  // namespace

double gamma(double x) {
  if (is_nonpositive_integer(x)) {
    throw std::domain_error("gamma: pole at non-positive integer");
  }
  if (x < 0.5) {
    return std::numbers::pi /
           (std::sin(std::numbers::pi * x) * gamma(1.0 - x));
  }
  const auto [log_lead, series] = lanczos_parts(x);
  return std::exp(log_lead) * series;
}

double log_gamma(double x) {
  if (is_nonpositive_integer(x)) {
    throw std::domain_error("log_gamma: pole at non-positive integer");
  }
  if (x < 0.5) {
    return std::log(std::numbers::pi /
                    std::abs(std::sin(std::numbers::pi * x))) -
           log_gamma(1.0 - x);
  }
  const auto [log_lead, series] = lanczos_parts(x);
  return log_lead + std::log(series);
}

long double gamma_shifted(double a, int n) {
  if (!(a > 0.0 && a <= 1.0) || n < 0) {
    throw std::invalid_argument("gamma_shifted: need a in (0,1], n >= 0");
  }
  // Gamma(a + n) = Gamma(a + 1) * prod_{j=1}^{n-1} (a + j)
  if (n == 0) return static_cast<long double>(gamma(a + 1.0)) / a;
  long double v = gamma(a + 1.0);
  for (int j = 1; j < n; ++j) v *= static_cast<long double>(a) + j;
  return v;
}

long double factorial_ld(int n) {
  if (n < 0 || n > kMaxLongDoubleFactorial) {
    throw std::out_of_range("factorial_ld: n outside [0, 1754]");
  }
  return factorial_table()[static_cast<std::size_t>(n)];
}

double factorial(int n) {
  if (n < 0 || n > kMaxDoubleFactorial) {
    throw std::out_of_range("factorial: n outside [0, 170]");
  }
  return static_cast<double>(factorial_table()[static_cast<std::size_t>(n)]);
}

}  // namespace umbracal
