#pragma once

// Finite-difference eigenvalues of the one-dimensional weighted Laplacian
// -f'' + V' f' and its heat trace.
//
// Two independent discretizations are provided:
//  * the Schrödinger form -f'' + W f with W = V'^2/4 - V''/2 (unitarily
//    equivalent through multiplication by exp(-V/2)), Dirichlet ends;
//  * the weighted Rayleigh quotient sum w_{i+1/2} (u_{i+1} - u_i)^2 / h^2
//    over sum w_i u_i^2, natural (Neumann) ends, which keeps the constant
//    eigenfunction exactly.

#include <cstddef>
#include <optional>

#include "spectra/grid.hpp"
#include "spectra/measure.hpp"
#include "spectra/spectrum.hpp"
#include "spectra/sturm.hpp"

namespace spectra {

/// Absolute bisection tolerance for all discretized spectra.
inline constexpr double kBisectionTol = 1e-10;

/// W(x_i) = V'(x_i)^2 / 4 - V''(x_i) / 2 on the interior nodes. For nu_p with
/// p < 2 a node at the origin is moved by h/2 to stay off the singularity.
PotentialGrid h_transform_potential(const MeasureSpec1D& spec, const Grid1D& grid);

/// Tridiagonal of the Dirichlet Schrödinger operator: 2/h^2 + W_i, -1/h^2.
Tridiagonal schrodinger_matrix(const PotentialGrid& W);

/// Lowest k_max Dirichlet eigenvalues of -d^2/dx^2 + W. Attaches a truncation
/// note when W at either end does not exceed the largest computed eigenvalue
/// by max(1, 25%).
Spectrum solve_schrodinger_dirichlet(const PotentialGrid& W, std::size_t k_max);

/// Symmetrized matrix M^{-1/2} K M^{-1/2} of the weighted Rayleigh quotient,
/// assembled from differences of V so that tiny weights never underflow.
Tridiagonal weighted_neumann_matrix(const MeasureSpec1D& spec, const Grid1D& grid);

/// Smaller of the h-transform potential W = V'^2/4 - V''/2 at the two end nodes.
double end_wall(const MeasureSpec1D& spec, const Grid1D& grid);

/// Lowest k_max eigenvalues of the weighted Neumann discretization;
/// lambda_1 is reported as exactly 0 when |lambda_1| < 1e-9. Applies the same
/// confinement warning as the Dirichlet form, with W evaluated at the ends.
Spectrum solve_weighted_neumann(const MeasureSpec1D& spec, const Grid1D& grid, std::size_t k_max);

struct HeatTrace {
  double value = 0.0;                // partial + tail (tail = 0 when unknown)
  double partial = 0.0;              // sum over represented eigenvalues
  std::optional<double> tail;        // remainder of a closed-form model spectrum
  bool truncated_lower_estimate = false;  // true when the tail is unknown
};

/// Z(t) = sum_k exp(-t lambda_k). Exact model spectra carry a ModelTail and
/// the omitted levels are summed until they no longer change the result;
/// otherwise the partial sum is flagged as a lower estimate.
HeatTrace heat_trace(const Spectrum& spectrum, double t);

}  // namespace spectra
