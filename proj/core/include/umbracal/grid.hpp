#pragma once

// Uniform periodic grid and complex samples on it.
//
// Nodes are x_i = x_min + i * h, i = 0..n-1, with h = (x_max - x_min) / n;
// x_max itself is the periodic image of x_min and is not a node.

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace umbracal {

struct Grid {
  double x_min = -1.0;
  double x_max = 1.0;
  int n = 8;

  /// Throws std::invalid_argument unless n >= 8 is a power of two and
  /// x_max > x_min.
  void validate() const;
  double spacing() const { return (x_max - x_min) / n; }
  double length() const { return x_max - x_min; }
  double node(int i) const { return x_min + i * spacing(); }
  std::vector<double> nodes() const;
};

struct Field {
  Grid grid;
  std::vector<std::complex<double>> values;

  /// Samples f at the grid nodes.
  static Field sample(const Grid& grid, const std::function<std::complex<double>(double)>& f);

  /// Throws std::invalid_argument if values.size() != grid.n or the grid is invalid.
  void validate() const;

  /// Arithmetic mean of the samples.
  std::complex<double> mean() const;
};

/// max_i |a_i - b_i| over a common grid.
double sup_distance(const Field& a, const Field& b);

}  // namespace umbracal
