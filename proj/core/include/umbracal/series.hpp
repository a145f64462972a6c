#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>

#include "umbracal/special.hpp"

namespace umbracal {

/// Value of a truncated series together with what is needed to audit the
/// truncation: how many terms were summed and the magnitude of the last
/// non-vanishing term kept.
template <class T = double>
struct SeriesResult {
  T value{};
  int terms_used = 1;
  double last_term = 0.0;
};

/// Plain partial sum of all terms; last_term is the last non-zero magnitude.
template <class T>
SeriesResult<T> sum_all(std::span<const T> terms) {
  CompensatedSum<T> acc;
  double last = 0.0;
  for (const T& t : terms) {
    acc.add(t);
    if (t != T{}) last = std::abs(t);
  }
  return {acc.value(), static_cast<int>(std::max<std::size_t>(terms.size(), 1)), last};
}

/// Optimal truncation of an asymptotic series: sum through the term with the
/// smallest envelope, where the envelope of a term is the largest magnitude
/// among it and the next two non-zero terms. Structural zeros are skipped so a
/// lacunary pattern cannot fake a minimum; the envelope keeps an accidental
/// near-zero from stopping the sum after the terms have started to grow.
template <class T>
SeriesResult<T> sum_to_smallest_term(std::span<const T> terms) {
  if (terms.empty()) return {};
  std::size_t best = 0;
  double best_env = INFINITY;
  for (std::size_t k = 1; k < terms.size(); ++k) {
    if (terms[k] == T{}) continue;
    double env = std::abs(terms[k]);
    int seen = 1;
    for (std::size_t j = k + 1; j < terms.size() && seen < 3; ++j) {
      if (terms[j] == T{}) continue;
      env = std::max(env, static_cast<double>(std::abs(terms[j])));
      ++seen;
    }
    if (env < best_env) {
      best_env = env;
      best = k;
    }
  }
  if (best == 0) return {terms[0], 1, 0.0};
  CompensatedSum<T> acc;
  for (std::size_t k = 0; k <= best; ++k) acc.add(terms[k]);
  return {acc.value(), static_cast<int>(best + 1), static_cast<double>(std::abs(terms[best]))};
}

}  // namespace umbracal
