#pragma once

#include <functional>

namespace spectra {

/// Adaptive Gauss–Kronrod (7/15) integral of f over the finite interval [a, b].
/// Throws NumericalError when the error estimate exceeds `abs_tol`.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12);

}  // namespace spectra
