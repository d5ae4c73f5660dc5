#pragma once

#include <stdexcept>
#include <string>

namespace spectra {

/// Thrown when caller-supplied parameters violate an operation's preconditions.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when a numerical routine cannot reach its tolerance (quadrature,
/// root finding, bisection) or produces non-finite values.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

}  // namespace spectra
