#pragma once

#include <functional>
#include <limits>
#include <string>
#include <variant>

#include "spectra/grid.hpp"

namespace spectra {

/// Gaussian measure with V = rho x^2 / 2.
struct GaussianFamily {
  double rho = 1.0;
};

/// nu_p with V = |x|^p / p.
struct ExpPowerFamily {
  double p = 2.0;
};

/// Arbitrary log-density V with its first two derivatives.
struct CustomFamily {
  std::function<double(double)> V;
  std::function<double(double)> dV;
  std::function<double(double)> d2V;
  std::string label;
};

using MeasureFamily = std::variant<GaussianFamily, ExpPowerFamily, CustomFamily>;

struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
};

/// One-dimensional probability measure exp(-V(x) - log_normalizer) dx on
/// `support`. `log_normalizer` is the log of the total mass of exp(-V), so
/// density() always integrates to one.
struct MeasureSpec1D {
  MeasureFamily family;
  Interval support;
  double log_normalizer = 0.0;
  /// Location of the minimum of V and the interval where exp(-V) >= 1e-18 of
  /// its maximum. Filled in by the factory functions below.
  double center = 0.0;
  Interval bulk;

  double V(double x) const;
  double dV(double x) const;
  double d2V(double x) const;
  /// Normalized density; zero outside the support.
  double density(double x) const;
  std::string label() const;
};

MeasureSpec1D gaussian_measure(double rho);
MeasureSpec1D exp_power_measure(double p);
/// Custom measure; the normalizer is computed by quadrature over the
/// computational support.
MeasureSpec1D custom_measure(CustomFamily family, Interval support = {});

/// Interval outside of which exp(-V) < rel * max exp(-V), intersected with
/// the support. This is where all numerics truncate the real line.
Interval computational_support(const MeasureSpec1D& spec, double rel = 1e-18);

/// Grid with N interior nodes over the computational support. When
/// `radius` > 0 the grid is [-radius, radius] instead.
Grid1D default_grid(const MeasureSpec1D& spec, std::size_t N, double radius = 0.0);

/// True if the measure is symmetric under x -> -x (Gaussian, nu_p).
bool is_symmetric(const MeasureSpec1D& spec);

}  // namespace spectra
