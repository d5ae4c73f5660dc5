#include "spectra/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spectra/errors.hpp"
#include "spectra/quadrature.hpp"

namespace spectra {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

// -log(1e-18): depth of the potential well covered by the computational support.
const double kBulkDepth = -std::log(1e-18);

double clamp_to(const Interval& iv, double x) { return std::clamp(x, iv.lo, iv.hi); }

double golden_min(const std::function<double(double)>& f, double lo, double hi, double tol) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - invphi * (hi - lo);
  double d = lo + invphi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  while (hi - lo > tol * (1.0 + std::abs(lo) + std::abs(hi))) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - invphi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + invphi * (hi - lo);
      fd = f(d);
    }
  }
  return 0.5 * (lo + hi);
}

double find_center(const MeasureSpec1D& spec) {
  if (!std::holds_alternative<CustomFamily>(spec.family)) return clamp_to(spec.support, 0.0);
  constexpr int kSamples = 2001;
  const double anchor = clamp_to(spec.support, 0.0);
  for (double R = 1.0; R <= 1e4; R *= 2.0) {
    const double lo = std::max(spec.support.lo, anchor - R);
    const double hi = std::min(spec.support.hi, anchor + R);
    const double step = (hi - lo) / (kSamples - 1);
    std::size_t best = 0;
    double best_v = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kSamples; ++i) {
      const double v = spec.V(lo + i * step);
      if (v < best_v) {
        best_v = v;
        best = static_cast<std::size_t>(i);
      }
    }
    const bool left_ok = lo == spec.support.lo || spec.V(lo) - best_v >= kBulkDepth;
    const bool right_ok = hi == spec.support.hi || spec.V(hi) - best_v >= kBulkDepth;
    if (left_ok && right_ok && std::isfinite(best_v)) {
      const double a = lo + (best == 0 ? 0.0 : (best - 1.0) * step);
      const double b = lo + std::min<double>(best + 1.0, kSamples - 1.0) * step;
      return golden_min([&](double x) { return spec.V(x); }, a, b, 1e-12);
    }
  }
  throw ValidationError("potential " + spec.label() + " is not confining: exp(-V) is not normalizable");
}

// First point beyond `from` (in direction `dir`) where V - V(center) >= depth.
double find_edge(const MeasureSpec1D& spec, double center, double depth, int dir) {
  const double limit = dir < 0 ? spec.support.lo : spec.support.hi;
  const double base = spec.V(center);
  double inner = center;
  for (double d = 0.5; d < 1e7; d *= 2.0) {
    double x = center + dir * d;
    if ((dir < 0 && x <= limit) || (dir > 0 && x >= limit)) return limit;
    if (spec.V(x) - base >= depth) {
      double a = inner, b = x;
      for (int it = 0; it < 200 && std::abs(b - a) > 1e-12 * (1.0 + std::abs(b)); ++it) {
        const double m = 0.5 * (a + b);
        (spec.V(m) - base >= depth ? b : a) = m;
      }
      return b;
    }
    inner = x;
  }
  throw ValidationError("potential " + spec.label() + " is not confining: exp(-V) is not normalizable");
}

void prepare(MeasureSpec1D& spec) {
  require(spec.support.lo < spec.support.hi, "support must be a nonempty interval");
  spec.center = find_center(spec);
  spec.bulk = computational_support(spec);
}

}  // namespace

double MeasureSpec1D::V(double x) const {
  return std::visit(overloaded{[x](const GaussianFamily& g) { return 0.5 * g.rho * x * x; },
                               [x](const ExpPowerFamily& e) { return std::pow(std::abs(x), e.p) / e.p; },
                               [x](const CustomFamily& c) { return c.V(x); }},
                    family);
}

double MeasureSpec1D::dV(double x) const {
  return std::visit(
      overloaded{[x](const GaussianFamily& g) { return g.rho * x; },
                 [x](const ExpPowerFamily& e) {
                   if (x == 0.0) return 0.0;
                   return std::copysign(std::pow(std::abs(x), e.p - 1.0), x);
                 },
                 [x](const CustomFamily& c) { return c.dV(x); }},
      family);
}

double MeasureSpec1D::d2V(double x) const {
  return std::visit(overloaded{[](const GaussianFamily& g) { return g.rho; },
                               [x](const ExpPowerFamily& e) {
                                 if (x == 0.0) {
                                   if (e.p == 2.0) return 1.0;
                                   return e.p > 2.0 ? 0.0 : std::numeric_limits<double>::infinity();
                                 }
                                 return (e.p - 1.0) * std::pow(std::abs(x), e.p - 2.0);
                               },
                               [x](const CustomFamily& c) { return c.d2V(x); }},
                    family);
}

double MeasureSpec1D::density(double x) const {
  if (x < support.lo || x > support.hi) return 0.0;
  return std::exp(-V(x) - log_normalizer);
}

std::string MeasureSpec1D::label() const {
  return std::visit(overloaded{[](const GaussianFamily& g) { return "gaussian:" + std::to_string(g.rho); },
                               [](const ExpPowerFamily& e) { return "exppower:" + std::to_string(e.p); },
                               [](const CustomFamily& c) { return "potential:" + c.label; }},
                    family);
}

MeasureSpec1D gaussian_measure(double rho) {
  require(std::isfinite(rho) && rho > 0.0, "gaussian curvature rho must be positive");
  MeasureSpec1D spec{GaussianFamily{rho}};
  spec.log_normalizer = 0.5 * std::log(2.0 * std::numbers::pi / rho);
  prepare(spec);
  return spec;
}

MeasureSpec1D exp_power_measure(double p) {
  require(std::isfinite(p) && p >= 1.0, "exponent p must be at least 1");
  MeasureSpec1D spec{ExpPowerFamily{p}};
  // total mass of exp(-|x|^p / p) is 2 p^{1/p} Gamma(1 + 1/p)
  spec.log_normalizer = std::numbers::ln2 + std::log(p) / p + std::lgamma(1.0 + 1.0 / p);
  prepare(spec);
  return spec;
}

MeasureSpec1D custom_measure(CustomFamily family, Interval support) {
  require(static_cast<bool>(family.V) && static_cast<bool>(family.dV) && static_cast<bool>(family.d2V),
          "custom potential needs V, V' and V''");
  MeasureSpec1D spec{std::move(family), support};
  prepare(spec);
  const double base = spec.V(spec.center);
  const double mass = integrate([&](double x) { return std::exp(-(spec.V(x) - base)); }, spec.bulk.lo,
                                spec.bulk.hi, 1e-12 * (spec.bulk.hi - spec.bulk.lo));
  require(mass > 0.0 && std::isfinite(mass), "custom potential has zero or infinite mass");
  spec.log_normalizer = std::log(mass) - base;
  return spec;
}

Interval computational_support(const MeasureSpec1D& spec, double rel) {
  require(rel > 0.0 && rel < 1.0, "relative truncation level must be in (0, 1)");
  const double depth = -std::log(rel);
  return {find_edge(spec, spec.center, depth, -1), find_edge(spec, spec.center, depth, +1)};
}

Grid1D default_grid(const MeasureSpec1D& spec, std::size_t N, double radius) {
  if (radius > 0.0) return make_grid(-radius, radius, N);
  require(std::isfinite(spec.bulk.lo) && std::isfinite(spec.bulk.hi), "computational support is unbounded");
  return make_grid(spec.bulk.lo, spec.bulk.hi, N);
}

bool is_symmetric(const MeasureSpec1D& spec) {
  if (!std::holds_alternative<CustomFamily>(spec.family)) return true;
  if (spec.support.lo != -spec.support.hi) return false;
  const double r = std::max(std::abs(spec.bulk.lo), std::abs(spec.bulk.hi));
  for (int i = 1; i <= 64; ++i) {
    const double x = r * i / 64.0;
    const double a = spec.V(x), b = spec.V(-x);
    if (std::abs(a - b) > 1e-12 * (1.0 + std::abs(a))) return false;
  }
  return true;
}

Grid1D make_grid(double a, double b, std::size_t N) {
  require(std::isfinite(a) && std::isfinite(b) && a < b, "grid needs finite endpoints with a < b");
  require(N >= 3, "grid needs at least 3 interior nodes");
  return Grid1D{a, b, N};
}

}  // namespace spectra
