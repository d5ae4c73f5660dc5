#pragma once

// Closed-form spectral and heat-trace bounds under curvature, log-Sobolev and
// Sobolev assumptions. The log-Sobolev constant L is always in the
// normalization Ent_mu(f^2) <= (2 / L) * int |grad f|^2 dmu.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spectra {

struct CurvatureData {
  double rho = 0.0;  // CD(rho, infinity) lower bound, any sign
  double L = 1.0;    // log-Sobolev constant, > 0
  double B = 0.0;    // log-Sobolev defect, >= 0
  double m2 = 0.0;   // second moment int d(x, x0)^2 dmu
};

enum class BoundMarker { number, unbounded, empty };

/// A named bound together with every input that produced it.
struct BoundReport {
  std::string name;
  double value = 0.0;
  BoundMarker marker = BoundMarker::number;
  std::map<std::string, double> inputs;
  std::map<std::string, double> details;  // auxiliary outputs (constants, maximizers)
  bool valid = true;
  std::string reason;                     // always set when !valid
  std::vector<std::string> notes;
};

/// h(rho, t) = 2 rho t / (exp(2 rho t) - 1), with h(0, t) = 1.
double harnack_factor(double rho, double t);

/// s(t) = h(rho, t/2) / (t/2), the exponent rate entering the trace bound.
double trace_rate(double rho, double t);

/// Smallest t with s(t) < L / 2 (open bound); nullopt when no t is feasible,
/// i.e. when L <= 4 (-rho)_+.
std::optional<double> feasible_time_threshold(double rho, double L);

/// #{lambda_k <= lambda} <= e^{n/2} (C lambda + 1)^{n/2},
/// C = 4 (n - 1) / (n (n - 2) rho), for Ric >= rho > 0 and n >= 3.
BoundReport clr_count_bound(int n, double rho, double lambda);

/// Threshold ceil(6 (5e)^{n/2}) above which the comparison factor applies.
double clr_comparison_threshold(int n);

/// lambda_k(M) >= (1 - 2/n) / (5e) * lambda_k(sphere) for k above the threshold.
BoundReport clr_eigen_comparison(int n, std::uint64_t k);

/// Z(t) <= exp(2 s / (1 - 2 s / L) * m2) whenever s = s(t) < L / 2.
BoundReport z_upper_bound(const CurvatureData& curv, double t);

/// sup_t (log k - 2 s / (1 - 2 s / L) m2) / t over feasible t, optimized on a
/// log-spaced bracket in [1e-3, 1e3] followed by golden-section refinement.
/// The maximizing t is returned in details["t_opt"]; negative values are
/// clamped to 0.
BoundReport eigen_lower_bound_wang(const CurvatureData& curv, std::uint64_t k);

/// (log k - log Z) / t clamped below at 0, from k exp(-t lambda_k) <= Z(t).
double eigen_lower_from_trace(std::uint64_t k, double Z, double t);

struct HyperParams {
  double q = 0.0;
  double beta = 0.0;
};

/// q(t) = 1 + (p - 1) e^{2 t L},  beta(t) = B (1/p - 1/q(t)).
HyperParams hyper_q_beta(double L, double B, double p, double t);

struct HyperConstants {
  double L = 0.0;
  double B = 0.0;
};

/// L = (q0 - 2) / (2 q0 t0), B = beta0 / (t0 L) from a single-time estimate at p = 2.
HyperConstants hyper_params_from_single_time(double t0, double q0, double beta0);

/// lambda_k(Gaussian R^n) / 392, with 392 = (14 sqrt 2)^2.
double lp_ball_eigen_bound(int n, std::uint64_t k);

/// Lowest index eigenvalue lambda_k of standard Gaussian space R^n, computed
/// directly from the counting function.
double gaussian_lambda_k(int n, std::uint64_t k);

struct TrichotomyResult {
  int scenario = 3;
  std::optional<std::string> warning;
};

/// 1: never Hilbert–Schmidt; 2: eventually Hilbert–Schmidt but never
/// hyperbounded; 3: eventually Hilbert–Schmidt and hyperbounded.
TrichotomyResult classify_trichotomy(bool has_discrete_spectrum, bool eventually_hilbert_schmidt,
                                     bool eventually_hyperbounded);

struct TrichotomyFlags {
  bool discrete = false;
  bool hilbert_schmidt = false;
  bool hyperbounded = false;
};

/// Reference evidence for nu_p (p = +infinity allowed): p = 1 has non-discrete
/// spectrum, p in (1, 2) has Hilbert–Schmidt P_t without a log-Sobolev
/// inequality, p >= 2 satisfies both.
TrichotomyFlags exp_power_trichotomy_flags(double p);

}  // namespace spectra
