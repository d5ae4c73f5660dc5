#pragma once

// Tiny arithmetic grammar for custom potentials V(x):
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' unary)?          right associative
//   atom   := number | 'x' | 'pi' | 'e' | fn '(' expr ')' | '(' expr ')'
//   fn     := 'abs' | 'exp'
//
// Exponents must not depend on x. Derivatives are carried alongside the value
// (second-order forward mode), so V' and V'' are exact up to rounding.

#include <memory>
#include <string>
#include <string_view>

#include "spectra/measure.hpp"

namespace spectra {

/// Value with first and second derivative with respect to x.
struct Jet {
  double v = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

class Expression {
 public:
  /// Throws ValidationError with the offending position on syntax errors.
  static Expression parse(std::string_view text);

  Jet eval(double x) const;
  double operator()(double x) const { return eval(x).v; }
  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

/// CustomFamily whose V, V' and V'' come from a parsed expression.
CustomFamily potential_from_expression(std::string_view text);

/// Parses "gaussian:<rho>", "exppower:<p>" (alias "nu:<p>") or
/// "potential:<expr>" into a measure.
MeasureSpec1D parse_measure(std::string_view text);

}  // namespace spectra
