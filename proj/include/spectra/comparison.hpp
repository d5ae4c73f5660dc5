#pragma once

// Executable checks of spectral comparison statements on concrete instances.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spectra/measure.hpp"
#include "spectra/spectrum.hpp"
#include "spectra/transport.hpp"

namespace spectra {

struct Violation {
  std::size_t k = 0;  // eigenvalue index, or 1-based position in a t grid
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // signed slack of the checked inequality; negative when it fails
};

/// One compared row; all rows are kept so reports can be printed in full.
struct ComparisonRow {
  std::size_t k = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool ok = true;
};

struct ComparisonReport {
  std::size_t k_checked = 0;
  std::vector<Violation> violations;
  std::vector<ComparisonRow> rows;
  bool passed = true;
  double tolerance = 0.0;
  std::optional<double> lipschitz;
  std::vector<std::string> warnings;
};

struct SolverOptions {
  std::size_t N = 4000;
  /// Half-width of the common interval [-radius, radius]; 0 starts from the
  /// union of the computational supports and widens it until W at both ends
  /// exceeds 2 lambda_kmax + 10 for both measures.
  double radius = 0.0;
};

inline constexpr double kDefaultComparisonTol = 5e-3;
inline constexpr std::size_t kDefaultComparisonK = 20;

/// lambda_k(target) >= lambda_k(source) / L^2 * (1 - tol) for k = 1..k_max.
ComparisonReport check_spectrum_ordering(const Spectrum& source, const Spectrum& target, double L,
                                         std::size_t k_max, double tol);

/// Solves both measures with the weighted Neumann discretization on a common
/// grid and checks the contraction ordering for an L-Lipschitz push-forward.
ComparisonReport check_contraction_ordering(const MeasureSpec1D& source, const MeasureSpec1D& target, double L,
                                            std::size_t k_max = kDefaultComparisonK,
                                            double tol = kDefaultComparisonTol, SolverOptions opts = {});

/// Derives L from the flat profiles and delegates to the contraction check.
/// An unbounded L passes vacuously with a warning.
ComparisonReport check_profile_ordering(const MeasureSpec1D& source, const MeasureSpec1D& target,
                                        std::size_t k_max = kDefaultComparisonK,
                                        double tol = kDefaultComparisonTol, SolverOptions opts = {});

/// sum_k exp(-t lambda_k(target)) <= sum_k exp(-t lambda_k(source) / L^2) over
/// the first k_max eigenvalues, on each t; a weaker consequence of ordering.
ComparisonReport check_trace_ordering(const Spectrum& source, const Spectrum& target, double L,
                                      std::size_t k_max, std::span<const double> t_grid, double tol);

/// (lambda_{n+2} of the sphere with Ric = g, lambda_{n+2} of Gaussian R^n)
/// = (n / (n - 1), 2). Throws NumericalError if the first is not smaller.
std::pair<double, double> sphere_gaussian_counterexample(int n);

/// Heat traces of M against the rescaled sphere S^n (Ric = rho g):
/// Z_M(t) <= Z_sphere(t) * (1 + tol) for each t. Without `other` the sphere
/// is compared with itself. A discretized or truncated `other` gives partial
/// sums, which are recorded as lower estimates in the warnings.
ComparisonReport berard_gallot_trace_check(int n, double rho, std::span<const double> t_grid,
                                           const std::optional<Spectrum>& other = std::nullopt,
                                           double tol = 1e-12);

}  // namespace spectra
