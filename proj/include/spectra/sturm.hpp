#pragma once

// Eigenvalues of real symmetric tridiagonal matrices by Sturm-sequence
// bisection. Each eigenvalue index is bracketed independently, so the
// parallel kernel distributes indices across OpenMP threads; the serial
// reference kernel runs the identical per-index routine in a plain loop and
// is kept for testing and benchmarking.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace spectra {

/// Symmetric tridiagonal matrix: diag.size() == n, off.size() == n - 1.
struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;

  std::size_t size() const { return diag.size(); }
};

/// Throws on shape mismatch, non-finite entries, or count > dimension.
void check_tridiagonal(const Tridiagonal& T, std::size_t count);

/// Number of eigenvalues strictly below x (sign changes of the Sturm sequence).
std::size_t sturm_count(const Tridiagonal& T, double x);

/// Gershgorin interval containing the whole spectrum.
std::pair<double, double> gershgorin_bounds(const Tridiagonal& T);

/// The index-th smallest eigenvalue (0-based) to absolute tolerance `tol`.
/// Throws NumericalError if bisection fails to converge.
double bisect_eigenvalue(const Tridiagonal& T, std::size_t index, double tol,
                         std::pair<double, double> bounds);

/// Smallest `count` eigenvalues, ascending. OpenMP-parallel over indices.
std::vector<double> smallest_eigenvalues(const Tridiagonal& T, std::size_t count, double tol = 1e-10);

namespace reference {

/// Serial version of spectra::smallest_eigenvalues.
std::vector<double> smallest_eigenvalues(const Tridiagonal& T, std::size_t count, double tol = 1e-10);

}  // namespace reference

}  // namespace spectra
