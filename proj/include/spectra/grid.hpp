#pragma once

#include <cstddef>
#include <vector>

namespace spectra {

/// Uniform grid on [a, b] with N interior nodes x_i = a + (i + 1) h, i = 0..N-1.
struct Grid1D {
  double a = 0.0;
  double b = 1.0;
  std::size_t N = 3;

  double h() const { return (b - a) / static_cast<double>(N + 1); }
  double node(std::size_t i) const { return a + static_cast<double>(i + 1) * h(); }
};

/// Validating constructor: a < b, N >= 3, finite endpoints.
Grid1D make_grid(double a, double b, std::size_t N);

/// Schrödinger potential sampled at the interior nodes of a grid.
struct PotentialGrid {
  Grid1D grid;
  std::vector<double> W;
};

}  // namespace spectra
