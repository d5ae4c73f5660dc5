#pragma once

// Closed-form spectra and counting functions of the model spaces: Gaussian
// space R^n, the round sphere S^n rescaled to Ric = rho g, and the product
// measures nu^n_p ~ exp(-sum |x_i|^p / p).

#include <cstdint>
#include <optional>

#include "spectra/grid.hpp"
#include "spectra/spectrum.hpp"

namespace spectra {

struct ModelParams {
  int n = 1;
  double rho = 1.0;
  std::optional<double> p;
};

void validate(const ModelParams& params);

enum class CountKind { exact, asymptotic, lower_bound, upper_bound };

const char* to_string(CountKind kind);

/// #{lambda_k <= lambda}. `exact_count` is set only for kind == exact; `value`
/// always holds the count as a real.
struct CountingResult {
  double lambda = 0.0;
  double value = 0.0;
  std::optional<std::uint64_t> exact_count;
  CountKind kind = CountKind::exact;
};

/// Binomial coefficient C(n, k) in 64 bits; nullopt on overflow.
std::optional<std::uint64_t> binomial(std::uint64_t n, std::uint64_t k);
/// C(n, k) as a real through log-Gamma; used when the integer overflows.
double binomial_real(double n, double k);

/// Eigenvalues rho * l with multiplicity C(n - 1 + l, l), truncated to k_max
/// eigenvalues counted with multiplicity.
Spectrum gaussian_spectrum(const ModelParams& params, std::uint64_t k_max);

/// Exact count C(n + L, L), L = #{l >= 1 : rho * l <= lambda}. Falls back to a
/// real-valued count tagged asymptotic when the binomial overflows 64 bits.
CountingResult gaussian_count(const ModelParams& params, double lambda);

/// max(n/e k^{1/n} - n, log k / log((n + 1) e)) for unit curvature.
double gaussian_eigen_lower_bound(int n, std::uint64_t k);

/// Eigenvalue at degree m of the sphere rescaled so that Ric = rho g.
double sphere_eigenvalue(int n, double rho, std::uint64_t m);
/// Dimension of spherical harmonics of degree <= m on S^n; nullopt on overflow.
std::optional<std::uint64_t> sphere_cumulative_dimension(int n, std::uint64_t m);

/// Spectrum of S^n rescaled to Ric = rho g: m (m + n - 1) rho / (n - 1) with
/// multiplicity given by first differences of the cumulative dimension.
Spectrum sphere_spectrum(const ModelParams& params, std::uint64_t k_max);

/// Exact count for the rescaled sphere (rho = n - 1 is the canonical sphere).
CountingResult sphere_count(const ModelParams& params, double lambda);

/// Lower bound (sqrt(lambda) / n)^n for the canonical S^n, valid for lambda >= n^2.
CountingResult sphere_count_lower(int n, double lambda);

/// Leading coefficient of the Weyl asymptotics of nu^n_p, i.e. the count
/// divided by lambda^{(n/2) p/(p-1)}.
double nu_p_weyl_coefficient(int n, double p);
/// Leading-order Weyl count for nu^n_p (kind = asymptotic).
CountingResult nu_p_weyl_count(const ModelParams& params, double lambda);

/// How the edges of the sampled potential should be treated.
enum class PhaseDomain {
  truncated_line,  // grid truncates R: {W < lambda} must sit inside with a 5% margin
  interval,        // grid is the whole physical domain; no margin check
};

/// (1/pi) * integral of sqrt((lambda - W)_+) by the trapezoid rule: the
/// one-dimensional phase-space volume divided by 2 pi. The integrand is held
/// constant over the two boundary half-cells.
double weyl_phase_volume_1d(const PotentialGrid& W, double lambda,
                            PhaseDomain domain = PhaseDomain::truncated_line);

}  // namespace spectra
