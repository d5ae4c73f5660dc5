#include "spectra/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "spectra/errors.hpp"
#include "spectra/model_spectra.hpp"

namespace spectra {

namespace {

BoundReport invalid(BoundReport r, std::string reason, BoundMarker marker = BoundMarker::empty) {
  r.valid = false;
  r.reason = std::move(reason);
  r.marker = marker;
  r.value = 0.0;
  return r;
}

double wang_objective(const CurvatureData& c, double log_k, double t) {
  const double s = trace_rate(c.rho, t);
  return (log_k - 2.0 * s / (1.0 - 2.0 * s / c.L) * c.m2) / t;
}

}  // namespace

double harnack_factor(double rho, double t) {
  require(std::isfinite(t) && t > 0.0, "Harnack factor needs t > 0");
  require(std::isfinite(rho), "Harnack factor needs finite rho");
  const double x = 2.0 * rho * t;
  if (std::abs(x) < 1e-6) return 1.0 - x / 2.0 + x * x / 12.0;
  return x / std::expm1(x);
}

double trace_rate(double rho, double t) { return harnack_factor(rho, 0.5 * t) / (0.5 * t); }

std::optional<double> feasible_time_threshold(double rho, double L) {
  require(std::isfinite(L) && L > 0.0, "log-Sobolev constant L must be positive");
  const double x = 4.0 * rho / L;
  if (x <= -1.0) return std::nullopt;
  if (std::abs(rho) < 1e-12) return 4.0 / L;
  return std::log1p(x) / rho;
}

BoundReport clr_count_bound(int n, double rho, double lambda) {
  BoundReport r;
  r.name = "clr-count";
  r.inputs = {{"n", static_cast<double>(n)}, {"rho", rho}, {"lambda", lambda}};
  if (n < 3) return invalid(r, "n < 3: the Sobolev exponent 2n/(n-2) needs n >= 3");
  if (!(rho > 0.0)) return invalid(r, "rho must be positive");
  if (!(lambda > 0.0)) return invalid(r, "lambda must be positive");
  const double dn = n;
  const double C = 4.0 * (dn - 1.0) / (dn * (dn - 2.0) * rho);
  r.details["C"] = C;
  r.value = std::exp(dn / 2.0) * std::pow(C * lambda + 1.0, dn / 2.0);
  return r;
}

double clr_comparison_threshold(int n) {
  require(n >= 1, "dimension n must be at least 1");
  return std::ceil(6.0 * std::pow(5.0 * std::numbers::e, n / 2.0));
}

BoundReport clr_eigen_comparison(int n, std::uint64_t k) {
  BoundReport r;
  r.name = "clr-compare";
  r.inputs = {{"n", static_cast<double>(n)}, {"k", static_cast<double>(k)}};
  if (n < 3) return invalid(r, "n < 3: the comparison needs n >= 3");
  const double threshold = clr_comparison_threshold(n);
  r.details["threshold"] = threshold;
  r.value = (1.0 - 2.0 / n) / (5.0 * std::numbers::e);
  if (static_cast<double>(k) < threshold) {
    r.valid = false;
    r.reason = "k below 6 (5e)^{n/2} = " + std::to_string(threshold);
  }
  return r;
}

BoundReport z_upper_bound(const CurvatureData& curv, double t) {
  BoundReport r;
  r.name = "z-upper";
  r.inputs = {{"rho", curv.rho}, {"L", curv.L}, {"m2", curv.m2}, {"t", t}};
  if (!(t > 0.0)) return invalid(r, "t must be positive");
  if (!(curv.L > 0.0)) return invalid(r, "log-Sobolev constant L must be positive");
  if (!(curv.m2 >= 0.0)) return invalid(r, "second moment m2 must be nonnegative");
  const double s = trace_rate(curv.rho, t);
  r.details["s"] = s;
  if (s >= curv.L / 2.0) return invalid(r, "s >= L/2: bound not available at this t", BoundMarker::unbounded);
  r.value = std::exp(2.0 * s / (1.0 - 2.0 * s / curv.L) * curv.m2);
  return r;
}

BoundReport eigen_lower_bound_wang(const CurvatureData& curv, std::uint64_t k) {
  BoundReport r;
  r.name = "wang";
  r.inputs = {{"rho", curv.rho}, {"L", curv.L}, {"m2", curv.m2}, {"k", static_cast<double>(k)}};
  if (k < 1) return invalid(r, "k must be at least 1");
  if (!(curv.L > 0.0)) return invalid(r, "log-Sobolev constant L must be positive");
  if (!(curv.m2 >= 0.0)) return invalid(r, "second moment m2 must be nonnegative");
  const auto threshold = feasible_time_threshold(curv.rho, curv.L);
  if (!threshold) return invalid(r, "no feasible t: L <= 4 (-rho)_+", BoundMarker::empty);
  const double lo = std::max(1e-3, *threshold * (1.0 + 1e-9));
  const double hi = 1e3;
  if (lo >= hi) return invalid(r, "feasible times lie beyond the search bracket [1e-3, 1e3]");

  const double log_k = std::log(static_cast<double>(k));
  auto g = [&](double u) { return wang_objective(curv, log_k, std::exp(u)); };
  constexpr int kGrid = 512;
  const double ulo = std::log(lo), uhi = std::log(hi);
  const double du = (uhi - ulo) / (kGrid - 1);
  int best = 0;
  double best_val = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < kGrid; ++i) {
    const double v = g(ulo + i * du);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  double a = ulo + std::max(0, best - 1) * du;
  double b = ulo + std::min(kGrid - 1, best + 1) * du;
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
  double u_opt = ulo + best * du;
  if (const double refined = g(0.5 * (a + b)); refined > best_val) {
    best_val = refined;
    u_opt = 0.5 * (a + b);
  }
  r.details["t_opt"] = std::exp(u_opt);
  r.details["raw"] = best_val;
  r.details["t_min"] = *threshold;
  if (best_val <= 0.0) {
    r.value = 0.0;
    r.notes.push_back("supremum is nonpositive; clamped to 0 since lambda_k >= 0");
  } else {
    r.value = best_val;
  }
  return r;
}

double eigen_lower_from_trace(std::uint64_t k, double Z, double t) {
  require(k >= 1, "k must be at least 1");
  require(std::isfinite(Z) && Z > 0.0, "trace Z must be positive");
  require(std::isfinite(t) && t > 0.0, "t must be positive");
  return std::max(0.0, (std::log(static_cast<double>(k)) - std::log(Z)) / t);
}

HyperParams hyper_q_beta(double L, double B, double p, double t) {
  require(L > 0.0, "L must be positive");
  require(B >= 0.0, "B must be nonnegative");
  require(p > 1.0, "p must exceed 1");
  require(t > 0.0, "t must be positive");
  HyperParams h;
  h.q = 1.0 + (p - 1.0) * std::exp(2.0 * t * L);
  h.beta = B * (1.0 / p - 1.0 / h.q);
  return h;
}

HyperConstants hyper_params_from_single_time(double t0, double q0, double beta0) {
  require(t0 > 0.0, "t0 must be positive");
  require(q0 > 2.0, "q0 must exceed 2");
  require(beta0 >= 0.0, "beta0 must be nonnegative");
  HyperConstants c;
  c.L = (q0 - 2.0) / (2.0 * q0 * t0);
  c.B = beta0 / (t0 * c.L);
  return c;
}

double gaussian_lambda_k(int n, std::uint64_t k) {
  require(n >= 1, "dimension n must be at least 1");
  require(k >= 1, "k must be at least 1");
  // lambda_k = smallest l with #{lambda <= l} = C(n + l, l) >= k.
  std::uint64_t l = 0;
  for (;; ++l) {
    const auto c = binomial(static_cast<std::uint64_t>(n) + l, l);
    if (!c || *c >= k) break;
  }
  return static_cast<double>(l);
}

double lp_ball_eigen_bound(int n, std::uint64_t k) { return gaussian_lambda_k(n, k) / 392.0; }

TrichotomyResult classify_trichotomy(bool has_discrete_spectrum, bool eventually_hilbert_schmidt,
                                     bool eventually_hyperbounded) {
  TrichotomyResult r;
  if (!eventually_hilbert_schmidt) {
    r.scenario = 1;
    if (eventually_hyperbounded) {
      r.warning = "hyperbounded but never Hilbert-Schmidt: no finite-dimensional example is known";
    }
    return r;
  }
  r.scenario = eventually_hyperbounded ? 3 : 2;
  if (!has_discrete_spectrum) {
    r.warning = "inconsistent flags: a Hilbert-Schmidt semigroup is compact, so the spectrum must be discrete";
  }
  return r;
}

TrichotomyFlags exp_power_trichotomy_flags(double p) {
  require(p >= 1.0, "exponent p must be at least 1");
  if (p == 1.0) return {false, false, false};
  if (p < 2.0) return {true, true, false};
  return {true, true, true};
}

}  // namespace spectra
