#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "spectra/errors.hpp"
#include "spectra/sturm.hpp"

namespace spectra {

void check_tridiagonal(const Tridiagonal& T, std::size_t count) {
  require(!T.diag.empty(), "tridiagonal matrix is empty");
  require(T.off.size() + 1 == T.diag.size(), "off-diagonal must have n - 1 entries");
  require(count <= T.size(), "requested more eigenvalues than the matrix dimension");
  for (double d : T.diag) {
    if (!std::isfinite(d)) throw NumericalError("tridiagonal diagonal contains non-finite values");
  }
  for (double e : T.off) {
    if (!std::isfinite(e)) throw NumericalError("tridiagonal off-diagonal contains non-finite values");
  }
}

std::size_t sturm_count(const Tridiagonal& T, double x) {
  constexpr double kPivMin = std::numeric_limits<double>::min() * 1e10;
  std::size_t count = 0;
  double q = T.diag[0] - x;
  for (std::size_t i = 0;; ++i) {
    if (std::abs(q) < kPivMin) q = -kPivMin;
    if (q < 0.0) ++count;
    if (i + 1 == T.size()) break;
    q = T.diag[i + 1] - x - T.off[i] * T.off[i] / q;
  }
  return count;
}

std::pair<double, double> gershgorin_bounds(const Tridiagonal& T) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < T.size(); ++i) {
    const double r = (i > 0 ? std::abs(T.off[i - 1]) : 0.0) + (i + 1 < T.size() ? std::abs(T.off[i]) : 0.0);
    lo = std::min(lo, T.diag[i] - r);
    hi = std::max(hi, T.diag[i] + r);
  }
  const double pad = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
  return {lo - pad, hi + pad};
}

double bisect_eigenvalue(const Tridiagonal& T, std::size_t index, double tol, std::pair<double, double> bounds) {
  auto [lo, hi] = bounds;
  // Invariant: sturm_count(lo) <= index < sturm_count(hi).
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= tol || mid <= lo || mid >= hi) return mid;
    if (sturm_count(T, mid) > index) hi = mid;
    else lo = mid;
  }
  throw NumericalError("Sturm bisection did not converge for eigenvalue index " + std::to_string(index));
}

namespace reference {

std::vector<double> smallest_eigenvalues(const Tridiagonal& T, std::size_t count, double tol) {
  check_tridiagonal(T, count);
  const auto bounds = gershgorin_bounds(T);
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = bisect_eigenvalue(T, k, tol, bounds);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace reference

}  // namespace spectra
