#include "spectra/transport.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>

#include "spectra/errors.hpp"
#include "spectra/quadrature.hpp"

namespace spectra {

namespace {

constexpr double kQuadTol = 1e-12;
constexpr double kQuantileTol = 1e-11;
constexpr std::size_t kLipschitzSamples = 4096;

// A probability stored by its smaller tail: p = F(x) when !upper, p = 1 - F(x)
// when upper. Keeps full relative precision deep in either tail.
struct Prob {
  double p = 0.5;
  bool upper = false;

  double value() const { return upper ? 1.0 - p : p; }
  Prob flipped() const { return {p, !upper}; }
};

Prob prob_from_value(double v) { return v < 0.5 ? Prob{v, false} : Prob{1.0 - v, true}; }

double width(const MeasureSpec1D& spec) { return spec.bulk.hi - spec.bulk.lo; }

// mu((-inf, x]) for x left of the center.
double lower_mass(const MeasureSpec1D& spec, double x) {
  if (x <= spec.support.lo) return 0.0;
  const double from = x > spec.bulk.lo ? spec.bulk.lo : std::max(spec.support.lo, x - width(spec));
  return integrate([&](double t) { return spec.density(t); }, from, x, kQuadTol);
}

// mu([x, inf)) for x right of the center.
double upper_mass(const MeasureSpec1D& spec, double x) {
  if (x >= spec.support.hi) return 0.0;
  const double to = x < spec.bulk.hi ? spec.bulk.hi : std::min(spec.support.hi, x + width(spec));
  return integrate([&](double t) { return spec.density(t); }, x, to, kQuadTol);
}

Prob cdf_prob(const MeasureSpec1D& spec, double x) {
  if (x < spec.center) return {lower_mass(spec, x), false};
  return {upper_mass(spec, x), true};
}

// F(x) - target, evaluated in whichever tail representation is accurate.
double residual(const MeasureSpec1D& spec, double x, const Prob& target) {
  if (x < spec.center) {
    const double lower = lower_mass(spec, x);
    return target.upper ? lower - (1.0 - target.p) : lower - target.p;
  }
  const double upper = upper_mass(spec, x);
  return target.upper ? target.p - upper : (1.0 - upper) - target.p;
}

double quantile_prob(const MeasureSpec1D& spec, const Prob& target) {
  if (!(target.p > 0.0 && target.p < 1.0)) {
    throw ValidationError("quantile level must lie strictly inside (0, 1)");
  }
  // Bracket: residual(lo) < 0 < residual(hi).
  double lo = std::max(spec.support.lo, spec.bulk.lo);
  double hi = std::min(spec.support.hi, spec.bulk.hi);
  for (int i = 0; i < 64 && residual(spec, lo, target) > 0.0; ++i) {
    if (lo == spec.support.lo) break;
    lo = std::max(spec.support.lo, lo - width(spec));
  }
  for (int i = 0; i < 64 && residual(spec, hi, target) < 0.0; ++i) {
    if (hi == spec.support.hi) break;
    hi = std::min(spec.support.hi, hi + width(spec));
  }
  double x = std::clamp(spec.center, lo, hi);
  double r = residual(spec, x, target);
  for (int it = 0; it < 200; ++it) {
    (r < 0.0 ? lo : hi) = x;
    const double f = spec.density(x);
    double next = f > 0.0 ? x - r / f : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - x);
    x = next;
    r = residual(spec, x, target);
    if (std::abs(r) < kQuantileTol && step <= 1e-13 * (1.0 + std::abs(x))) return x;
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(x))) break;
  }
  if (std::abs(r) < kQuantileTol) return x;
  throw NumericalError("quantile did not converge at level " + std::to_string(target.value()));
}

double profile_prob(const MeasureSpec1D& spec, const Prob& v) { return spec.density(quantile_prob(spec, v)); }

double ratio_at(const MeasureSpec1D& source, const MeasureSpec1D& target, const Prob& v, Direction direction) {
  const Prob vt = direction == Direction::increasing ? v : v.flipped();
  return profile_prob(source, v) / profile_prob(target, vt);
}

// Clustered sample j of `count`, parameterized by theta in (0, pi):
// v = sin^2(theta / 2), 1 - v = cos^2(theta / 2).
Prob clustered_prob(double theta) {
  const double s = std::sin(0.5 * theta);
  const double c = std::cos(0.5 * theta);
  return theta < 0.5 * std::numbers::pi ? Prob{s * s, false} : Prob{c * c, true};
}

double clustered_theta(std::size_t j, std::size_t count) {
  return std::numbers::pi * (static_cast<double>(j) + 0.5) / static_cast<double>(count);
}

// Ratios on a log-spaced probe from the end sample one decade deeper into the
// tail. Unbounded if they keep increasing and end above the sampled sup.
bool diverges_into_tail(const MeasureSpec1D& source, const MeasureSpec1D& target, Direction direction,
                        Prob end, double sampled_sup, double& deepest) {
  constexpr int kProbe = 16;
  double previous = ratio_at(source, target, end, direction);
  const double first = previous;
  for (int i = 1; i <= kProbe; ++i) {
    const Prob v{end.p * std::pow(10.0, -static_cast<double>(i) / kProbe), end.upper};
    const double r = ratio_at(source, target, v, direction);
    if (!std::isfinite(r)) {
      deepest = r;
      return true;
    }
    if (!(r > previous * (1.0 + 1e-9))) return false;
    previous = r;
  }
  deepest = previous;
  return previous > first * (1.0 + 1e-4) && previous >= sampled_sup;
}

template <class Fn>
std::vector<double> map_samples(std::span<const double> v, Fn&& fn, bool parallel) {
  std::vector<double> out(v.size());
  std::exception_ptr failure;
  const auto n = static_cast<std::ptrdiff_t>(v.size());
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(v[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(spectra_transport_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

void check_level(double v) {
  if (!(v > 0.0 && v < 1.0)) throw ValidationError("level v must lie strictly inside (0, 1)");
}

}  // namespace

double cdf(const MeasureSpec1D& spec, double x) {
  if (std::isnan(x)) throw ValidationError("cdf of NaN");
  return std::clamp(cdf_prob(spec, x).value(), 0.0, 1.0);
}

double quantile(const MeasureSpec1D& spec, double v) {
  check_level(v);
  return quantile_prob(spec, prob_from_value(v));
}

double flat_profile(const MeasureSpec1D& spec, double v) {
  check_level(v);
  return profile_prob(spec, prob_from_value(v));
}

double monotone_map(const MeasureSpec1D& source, const MeasureSpec1D& target, double x, Direction direction) {
  const Prob v = cdf_prob(source, x);
  if (!(v.p > 0.0)) throw ValidationError("x lies where the source measure has no mass left to transport");
  return quantile_prob(target, direction == Direction::increasing ? v : v.flipped());
}

double TransportMap1D::derivative(double x) const {
  return source.density(x) / target.density((*this)(x));
}

std::vector<double> profile_ratios(const MeasureSpec1D& source, const MeasureSpec1D& target,
                                   std::span<const double> v, Direction direction) {
  for (double x : v) check_level(x);
  return map_samples(
      v, [&](double x) { return ratio_at(source, target, prob_from_value(x), direction); }, true);
}

namespace reference {

std::vector<double> profile_ratios(const MeasureSpec1D& source, const MeasureSpec1D& target,
                                   std::span<const double> v, Direction direction) {
  for (double x : v) check_level(x);
  return map_samples(
      v, [&](double x) { return ratio_at(source, target, prob_from_value(x), direction); }, false);
}

}  // namespace reference

std::vector<double> chebyshev_clustered(std::size_t count) {
  require(count >= 2, "need at least two samples");
  std::vector<double> v(count);
  for (std::size_t j = 0; j < count; ++j) v[j] = clustered_prob(clustered_theta(j, count)).value();
  return v;
}

LipschitzResult lipschitz_constant(const MeasureSpec1D& source, const MeasureSpec1D& target, Direction direction) {
  const std::size_t count = kLipschitzSamples;
  std::vector<double> thetas(count);
  for (std::size_t j = 0; j < count; ++j) thetas[j] = clustered_theta(j, count);
  const auto ratios = map_samples(
      thetas, [&](double th) { return ratio_at(source, target, clustered_prob(th), direction); }, true);

  LipschitzResult out;
  std::size_t best = 0;
  for (std::size_t j = 0; j < count; ++j) {
    if (!std::isfinite(ratios[j])) {
      out.unbounded = true;
      out.value = ratios[j];
      out.argmax = clustered_prob(thetas[j]).value();
      out.note = "profile ratio is not finite at a sampled level";
      return out;
    }
    if (ratios[j] > ratios[best]) best = j;
  }

  // Golden-section refinement of the sup between the neighbours of the best sample.
  double a = best == 0 ? 0.5 * thetas[0] : thetas[best - 1];
  double b = best + 1 == count ? 0.5 * (thetas[count - 1] + std::numbers::pi) : thetas[best + 1];
  auto g = [&](double th) { return ratio_at(source, target, clustered_prob(th), direction); };
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a), d = a + invphi * (b - a);
  double gc = g(c), gd = g(d);
  while (b - a > 1e-10) {
    if (gc > gd) {
      b = d, d = c, gd = gc;
      c = b - invphi * (b - a), gc = g(c);
    } else {
      a = c, c = d, gc = gd;
      d = a + invphi * (b - a), gd = g(d);
    }
  }
  out.value = ratios[best];
  out.argmax = clustered_prob(thetas[best]).value();
  const double th = 0.5 * (a + b);
  if (const double refined = g(th); refined > out.value) {
    out.value = refined;
    out.argmax = clustered_prob(th).value();
  }

  double deepest = 0.0;
  if (diverges_into_tail(source, target, direction, clustered_prob(thetas.front()), out.value, deepest)) {
    out.unbounded = true;
    out.value = std::max(out.value, deepest);
    out.argmax = 0.0;
    out.note = "profile ratio grows without bound as v -> 0";
  } else if (diverges_into_tail(source, target, direction, clustered_prob(thetas.back()), out.value, deepest)) {
    out.unbounded = true;
    out.value = std::max(out.value, deepest);
    out.argmax = 1.0;
    out.note = "profile ratio grows without bound as v -> 1";
  }
  return out;
}

}  // namespace spectra
