#include "spectra/comparison.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "spectra/discrete_laplacian.hpp"
#include "spectra/errors.hpp"
#include "spectra/model_spectra.hpp"

namespace spectra {

namespace {

// The walls must clear the largest eigenvalue by a wide margin: the boundary
// shifts high levels long before the plain confinement warning fires.
bool well_confined(const MeasureSpec1D& spec, const Grid1D& grid, const Spectrum& s) {
  const double top = s.lambda(s.k_max);
  return end_wall(spec, grid) >= 2.0 * top + 10.0;
}

// Solves both measures on one grid. Without an explicit radius the union of
// the bulks is widened about its midpoint until both spectra are confined.
std::pair<Spectrum, Spectrum> solve_pair(const MeasureSpec1D& source, const MeasureSpec1D& target,
                                         std::size_t k_max, const SolverOptions& opts,
                                         std::vector<std::string>& warnings) {
  if (opts.radius > 0.0) {
    const Grid1D grid = make_grid(-opts.radius, opts.radius, opts.N);
    return {solve_weighted_neumann(source, grid, k_max), solve_weighted_neumann(target, grid, k_max)};
  }
  const double lo = std::min(source.bulk.lo, target.bulk.lo);
  const double hi = std::max(source.bulk.hi, target.bulk.hi);
  const double mid = 0.5 * (lo + hi);
  double half = 0.5 * (hi - lo);
  for (int attempt = 0;; ++attempt) {
    const Grid1D grid = make_grid(mid - half, mid + half, opts.N);
    Spectrum s1 = solve_weighted_neumann(source, grid, k_max);
    Spectrum s2 = solve_weighted_neumann(target, grid, k_max);
    if (well_confined(source, grid, s1) && well_confined(target, grid, s2)) return {s1, s2};
    if (attempt == 16) {
      warnings.push_back("grid widened to [" + std::to_string(grid.a) + ", " + std::to_string(grid.b) +
                         "] without confining both spectra; high eigenvalues may be shifted");
      return {s1, s2};
    }
    half *= 1.25;
  }
}

void record(ComparisonReport& report, std::size_t k, double lhs, double rhs, double margin, bool ok) {
  report.rows.push_back({k, lhs, rhs, margin, ok});
  if (!ok) report.violations.push_back({k, lhs, rhs, margin});
}

}  // namespace

ComparisonReport check_spectrum_ordering(const Spectrum& source, const Spectrum& target, double L,
                                         std::size_t k_max, double tol) {
  require(std::isfinite(L) && L > 0.0, "Lipschitz constant must be positive and finite");
  require(tol >= 0.0 && tol < 1.0, "tolerance must lie in [0, 1)");
  require(k_max >= 1, "k_max must be at least 1");
  require(source.k_max >= k_max && target.k_max >= k_max, "spectra do not represent k_max eigenvalues");
  ComparisonReport report;
  report.tolerance = tol;
  report.lipschitz = L;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const double lhs = target.lambda(k);
    const double rhs = source.lambda(k) / (L * L);
    record(report, k, lhs, rhs, lhs - rhs, lhs >= rhs * (1.0 - tol));
  }
  report.k_checked = k_max;
  report.passed = report.violations.empty();
  return report;
}

ComparisonReport check_contraction_ordering(const MeasureSpec1D& source, const MeasureSpec1D& target, double L,
                                            std::size_t k_max, double tol, SolverOptions opts) {
  std::vector<std::string> warnings;
  const auto [s1, s2] = solve_pair(source, target, k_max, opts, warnings);
  auto report = check_spectrum_ordering(s1, s2, L, k_max, tol);
  report.warnings.insert(report.warnings.end(), warnings.begin(), warnings.end());
  if (k_max > opts.N / 100) {
    report.warnings.push_back("k_max exceeds N/100; high eigenvalues lose accuracy at this resolution");
  }
  return report;
}

ComparisonReport check_profile_ordering(const MeasureSpec1D& source, const MeasureSpec1D& target,
                                        std::size_t k_max, double tol, SolverOptions opts) {
  const LipschitzResult lip = lipschitz_constant(source, target);
  if (lip.unbounded) {
    ComparisonReport report;
    report.tolerance = tol;
    report.passed = true;
    report.warnings.push_back("monotone map is not Lipschitz (" + lip.note +
                              "); the ordering holds vacuously with no finite constant");
    return report;
  }
  return check_contraction_ordering(source, target, lip.value, k_max, tol, opts);
}

ComparisonReport check_trace_ordering(const Spectrum& source, const Spectrum& target, double L,
                                      std::size_t k_max, std::span<const double> t_grid, double tol) {
  require(std::isfinite(L) && L > 0.0, "Lipschitz constant must be positive and finite");
  require(source.k_max >= k_max && target.k_max >= k_max, "spectra do not represent k_max eigenvalues");
  const auto a = source.expanded();
  const auto b = target.expanded();
  ComparisonReport report;
  report.tolerance = tol;
  report.lipschitz = L;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    const double t = t_grid[i];
    require(t > 0.0, "t grid must be positive");
    double z_target = 0.0, z_source = 0.0;
    for (std::size_t k = 0; k < k_max; ++k) {
      z_target += std::exp(-t * b[k]);
      z_source += std::exp(-t * a[k] / (L * L));
    }
    record(report, i + 1, z_target, z_source, z_source - z_target, z_target <= z_source * (1.0 + tol));
  }
  report.k_checked = k_max;
  report.passed = report.violations.empty();
  return report;
}

std::pair<double, double> sphere_gaussian_counterexample(int n) {
  require(n >= 3, "the counterexample needs n >= 3");
  const auto k = static_cast<std::uint64_t>(n) + 2;
  const double sphere = sphere_spectrum({n, 1.0}, k).lambda(k);
  const double gauss = gaussian_spectrum({n, 1.0}, k).lambda(k);
  if (!(sphere < gauss)) throw NumericalError("sphere eigenvalue is not below the Gaussian one");
  return {sphere, gauss};
}

ComparisonReport berard_gallot_trace_check(int n, double rho, std::span<const double> t_grid,
                                           const std::optional<Spectrum>& other, double tol) {
  require(n >= 2, "sphere comparison needs n >= 2");
  const Spectrum sphere = sphere_spectrum({n, rho}, 1);
  ComparisonReport report;
  report.tolerance = tol;
  if (other && !(other->exact && other->tail)) {
    report.warnings.push_back("spectrum of M is truncated; its heat trace is a lower estimate");
  }
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    const double rhs = heat_trace(sphere, t_grid[i]).value;
    const double lhs = other ? heat_trace(*other, t_grid[i]).value : rhs;
    record(report, i + 1, lhs, rhs, rhs - lhs, lhs <= rhs * (1.0 + tol));
  }
  report.k_checked = t_grid.size();
  report.passed = report.violations.empty();
  return report;
}

}  // namespace spectra
