#include "spectra/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <string>

#include "spectra/errors.hpp"

namespace spectra {

double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol) {
  require(std::isfinite(a) && std::isfinite(b), "integration limits must be finite");
  if (a == b) return 0.0;
  // The relative tolerance must stay well above the 50 eps roundoff floor of
  // the error estimate, otherwise bisection never stops before max_depth.
  // Past about 20 levels the Kronrod estimate on a kinked integrand such as
  // exp(-|x|^p / p), p < 2, grows with depth while the work doubles per level.
  double error = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      f, a, b, /*max_depth=*/20, /*tolerance=*/1e-12, &error);
  if (!std::isfinite(value) || error > abs_tol) {
    throw NumericalError("quadrature on [" + std::to_string(a) + ", " + std::to_string(b) +
                         "] did not converge (error estimate " + std::to_string(error) + ")");
  }
  return value;
}

}  // namespace spectra
