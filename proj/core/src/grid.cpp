#include "umbracal/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "umbracal/special.hpp"

namespace umbracal {

void Grid::validate() const {
  if (n < 8 || (n & (n - 1)) != 0) {
    throw std::invalid_argument("grid: node count must be a power of two >= 8");
  }
  if (!(x_max > x_min) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
    throw std::invalid_argument("grid: need finite x_min < x_max");
  }
}

std::vector<double> Grid::nodes() const {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = node(i);
  return out;
}

Field Field::sample(const Grid& grid, const std::function<std::complex<double>(double)>& f) {
  grid.validate();
  Field out{grid, std::vector<std::complex<double>>(static_cast<std::size_t>(grid.n))};
  for (int i = 0; i < grid.n; ++i) out.values[static_cast<std::size_t>(i)] = f(grid.node(i));
  return out;
}

void Field::validate() const {
  grid.validate();
  if (values.size() != static_cast<std::size_t>(grid.n)) {
    throw std::invalid_argument("field: sample count does not match the grid");
  }
}

std::complex<double> Field::mean() const {
  CompensatedSum<std::complex<double>> acc;
  for (const auto& v : values) acc.add(v);
  return acc.value() / static_cast<double>(values.size());
}

double sup_distance(const Field& a, const Field& b) {
  if (a.values.size() != b.values.size()) {
    throw std::invalid_argument("sup_distance: fields differ in size");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
  }
  return worst;
}

}  // namespace umbracal
