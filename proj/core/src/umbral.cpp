#include "umbracal/umbral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "umbracal/special.hpp"

namespace umbracal {

UmbralKey::UmbralKey(UmbraId u, int halves) {
  if (u.order < 2) throw std::invalid_argument("umbra order must be >= 2");
  if (halves < 0) throw std::invalid_argument("umbral exponent must be >= 0");
  if (halves > 0) factors_.emplace_back(u.order, halves);
}

int UmbralKey::halves_of(UmbraId u) const {
  for (const auto& [order, halves] : factors_) {
    if (order == u.order) return halves;
  }
  return 0;
}

UmbralKey operator*(const UmbralKey& a, const UmbralKey& b) {
  UmbralKey out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() ||
        (ia != a.factors_.end() && ia->first < ib->first)) {
      out.factors_.push_back(*ia++);
    } else if (ia == a.factors_.end() || ib->first < ia->first) {
      out.factors_.push_back(*ib++);
    } else {
      out.factors_.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return out;
}

UmbralPoly UmbralPoly::constant(Coeff c) {
  UmbralPoly p;
  p.accumulate(UmbralKey{}, c);
  return p;
}

UmbralPoly UmbralPoly::monomial(UmbraId u, int halves, Coeff coeff) {
  UmbralPoly p;
  p.accumulate(UmbralKey(u, halves), coeff);
  return p;
}

UmbralPoly::Coeff UmbralPoly::coefficient(const UmbralKey& key) const {
  const auto it = terms_.find(key);
  return it == terms_.end() ? Coeff{} : it->second;
}

void UmbralPoly::accumulate(const UmbralKey& key, Coeff c) {
  if (c == Coeff{}) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Coeff{}) terms_.erase(it);
  }
}

UmbralPoly& UmbralPoly::operator+=(const UmbralPoly& other) {
  for (const auto& [key, c] : other.terms_) accumulate(key, c);
  return *this;
}

UmbralPoly& UmbralPoly::operator-=(const UmbralPoly& other) {
  for (const auto& [key, c] : other.terms_) accumulate(key, -c);
  return *this;
}

UmbralPoly& UmbralPoly::operator*=(Coeff scalar) {
  if (scalar == Coeff{}) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= scalar;
    it = it->second == Coeff{} ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

UmbralPoly operator*(const UmbralPoly& a, const UmbralPoly& b) {
  UmbralPoly out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.accumulate(ka * kb, ca * cb);
  }
  return out;
}

UmbralPoly pow(const UmbralPoly& a, unsigned n) {
  UmbralPoly result = UmbralPoly::constant(1.0);
  UmbralPoly base = a;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

UmbralPoly umbral_exp(const UmbralPoly& p, int truncation) {
  if (truncation < 0) throw std::invalid_argument("umbral_exp: truncation < 0");
  UmbralPoly sum = UmbralPoly::constant(1.0);
  UmbralPoly term = UmbralPoly::constant(1.0);
  for (int k = 1; k <= truncation && !term.is_zero(); ++k) {
    term = term * p;
    term *= 1.0 / k;
    sum += term;
  }
  return sum;
}

std::complex<double> project(const UmbralPoly& p,
                             std::span<const DeferredRoot> roots) {
  CompensatedSum<std::complex<double>> acc;
  for (const auto& [key, coeff] : p.terms()) {
    long double factor = 1.0L;
    for (const auto& [order, halves] : key.factors()) {
      const long double moment = hermite_moment(order, HalfInteger(halves));
      if (moment == 0.0L) {
        factor = 0.0L;
        break;
      }
      factor *= moment;
      const auto root = std::find_if(roots.begin(), roots.end(),
                                     [o = order](const DeferredRoot& r) {
                                       return r.umbra.order == o;
                                     });
      if (root == roots.end()) continue;
      // u^{halves/2} stands for value^{halves/(2 order)} u^{halves/2}.
      const int num = halves;
      const int den = 2 * order;
      if (num % den == 0) {
        factor *= std::pow(static_cast<long double>(root->value), num / den);
      } else {
        if (root->value < 0.0) {
          throw std::domain_error(
              "project: fractional power of a negative deferred root");
        }
        factor *= std::pow(static_cast<long double>(root->value),
                           static_cast<long double>(num) / den);
      }
    }
    if (factor == 0.0L) continue;
    acc.add({static_cast<double>(coeff.real() * factor),
             static_cast<double>(coeff.imag() * factor)});
  }
  return acc.value();
}

}  // namespace umbracal
