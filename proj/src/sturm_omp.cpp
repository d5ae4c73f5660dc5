#include <omp.h>

#include <algorithm>
#include <exception>

#include "spectra/sturm.hpp"

namespace spectra {

std::vector<double> smallest_eigenvalues(const Tridiagonal& T, std::size_t count, double tol) {
  check_tridiagonal(T, count);
  const auto bounds = gershgorin_bounds(T);
  std::vector<double> out(count);
  std::exception_ptr failure;
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    try {
      out[static_cast<std::size_t>(k)] = bisect_eigenvalue(T, static_cast<std::size_t>(k), tol, bounds);
    } catch (...) {
#pragma omp critical(spectra_sturm_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace spectra
