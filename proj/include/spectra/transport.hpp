#pragma once

// One-dimensional transport: CDFs, quantiles, flat isoperimetric profiles
// I(v) = f(F^{-1}(v)), the monotone map T = F_2^{-1} o F_1 and its optimal
// Lipschitz constant sup_v I_1(v) / I_2(v).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spectra/measure.hpp"

namespace spectra {

enum class Direction { increasing, decreasing };

/// F(x) = mu((-inf, x]) by adaptive Gauss–Kronrod quadrature, clamped to [0, 1].
/// The tail closer to x is integrated so small values keep relative accuracy.
double cdf(const MeasureSpec1D& spec, double x);

/// The x with F(x) = v, by bracketed bisection with Newton polishing.
double quantile(const MeasureSpec1D& spec, double v);

/// I(v) = f(F^{-1}(v)).
double flat_profile(const MeasureSpec1D& spec, double v);

/// T(x) = F_2^{-1}(F_1(x)), or F_2^{-1}(1 - F_1(x)) for the decreasing map.
double monotone_map(const MeasureSpec1D& source, const MeasureSpec1D& target, double x,
                    Direction direction = Direction::increasing);

/// The monotone map as a value, with T' evaluated through the profile ratio
/// T'(x) = f_1(x) / f_2(T(x)).
struct TransportMap1D {
  MeasureSpec1D source;
  MeasureSpec1D target;
  Direction direction = Direction::increasing;
  std::optional<double> lipschitz;

  double operator()(double x) const { return monotone_map(source, target, x, direction); }
  /// |T'(x)|.
  double derivative(double x) const;
};

/// sup of the profile ratio, or an "unbounded" marker when the ratio keeps
/// growing into an endpoint.
struct LipschitzResult {
  bool unbounded = false;
  double value = 0.0;   // the sup (or the largest sampled ratio when unbounded)
  double argmax = 0.0;  // v where the sup is attained
  std::string note;
};

/// Profile ratios I_source(v) / I_target(v) (or I_target(1 - v) for the
/// decreasing direction) at each v. OpenMP-parallel over samples.
std::vector<double> profile_ratios(const MeasureSpec1D& source, const MeasureSpec1D& target,
                                   std::span<const double> v, Direction direction = Direction::increasing);

namespace reference {
/// Serial version of spectra::profile_ratios.
std::vector<double> profile_ratios(const MeasureSpec1D& source, const MeasureSpec1D& target,
                                   std::span<const double> v, Direction direction = Direction::increasing);
}  // namespace reference

/// `count` points in (0, 1) clustered toward both ends:
/// v_j = (1 - cos(pi (j + 1/2) / count)) / 2.
std::vector<double> chebyshev_clustered(std::size_t count);

/// Optimal Lipschitz constant of the monotone map: dense sampling on 4096
/// clustered points, golden-section refinement around the best sample, and a
/// log-spaced probe of the last decade below the smallest sample at each end
/// to detect ratios that diverge at v -> 0 or v -> 1.
LipschitzResult lipschitz_constant(const MeasureSpec1D& source, const MeasureSpec1D& target,
                                   Direction direction = Direction::increasing);

}  // namespace spectra
