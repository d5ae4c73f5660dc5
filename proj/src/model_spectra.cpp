#include "spectra/model_spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <numbers>

#include "spectra/errors.hpp"

namespace spectra {

namespace {

// Keeps closed-form spectra to a size that fits comfortably in memory.
constexpr std::uint64_t kMaxRepresented = 10'000'000;

void validate_k_max(std::uint64_t k_max) {
  require(k_max >= 1, "k_max must be at least 1");
  require(k_max <= kMaxRepresented, "k_max exceeds the supported maximum of 1e7");
}

std::string level_note(const char* model, std::uint64_t level, std::uint64_t represented,
                       std::uint64_t full) {
  std::string note = std::string(model) + " spectrum truncated after degree " +
                     std::to_string(level);
  if (represented < full) {
    note += " (" + std::to_string(represented) + " of " + std::to_string(full) +
            " copies of the last level represented)";
  }
  return note;
}

// Largest L with rho * L <= lambda, evaluated exactly as spectrum values are.
std::optional<std::uint64_t> gaussian_top_level(double rho, double lambda) {
  const double ratio = std::floor(lambda / rho);
  if (!(ratio < 9.0e15)) return std::nullopt;
  auto L = static_cast<std::uint64_t>(ratio);
  while (rho * static_cast<double>(L + 1) <= lambda) ++L;
  while (L > 0 && rho * static_cast<double>(L) > lambda) --L;
  return L;
}

}  // namespace

void validate(const ModelParams& params) {
  require(params.n >= 1, "dimension n must be at least 1");
  require(std::isfinite(params.rho) && params.rho > 0.0, "curvature rho must be positive");
  if (params.p) require(std::isfinite(*params.p) && *params.p > 1.0, "exponent p must exceed 1");
}

const char* to_string(CountKind kind) {
  switch (kind) {
    case CountKind::exact: return "exact";
    case CountKind::asymptotic: return "asymptotic";
    case CountKind::lower_bound: return "lower_bound";
    case CountKind::upper_bound: return "upper_bound";
  }
  return "unknown";
}

std::optional<std::uint64_t> binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i is C(n - k + i, i). After removing gcd(r, i) from r,
    // the rest of i divides n - k + i exactly.
    const std::uint64_t g = std::gcd(r, i);
    const std::uint64_t factor = (n - k + i) / (i / g);
    r /= g;
    if (r > std::numeric_limits<std::uint64_t>::max() / factor) return std::nullopt;
    r *= factor;
  }
  return r;
}

double binomial_real(double n, double k) {
  if (k < 0.0 || k > n) return 0.0;
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

Spectrum gaussian_spectrum(const ModelParams& params, std::uint64_t k_max) {
  validate(params);
  validate_k_max(k_max);
  Spectrum s;
  s.exact = true;
  s.k_max = k_max;
  const auto n = static_cast<std::uint64_t>(params.n);
  std::uint64_t remaining = k_max;
  for (std::uint64_t l = 0; remaining > 0; ++l) {
    const auto full = binomial(n - 1 + l, l);
    const std::uint64_t take = full ? std::min(*full, remaining) : remaining;
    s.entries.push_back({params.rho * static_cast<double>(l), take});
    remaining -= take;
    if (remaining == 0) {
      s.tail = ModelTail{ModelKind::gaussian, params.n, params.rho, l, take};
      s.truncation_note =
          level_note("gaussian", l, take, full.value_or(std::numeric_limits<std::uint64_t>::max()));
    }
  }
  return s;
}

CountingResult gaussian_count(const ModelParams& params, double lambda) {
  validate(params);
  require(std::isfinite(lambda) && lambda >= 0.0, "lambda must be finite and nonnegative");
  CountingResult r;
  r.lambda = lambda;
  const auto top = gaussian_top_level(params.rho, lambda);
  if (top) {
    if (const auto c = binomial(static_cast<std::uint64_t>(params.n) + *top, *top)) {
      r.exact_count = *c;
      r.value = static_cast<double>(*c);
      r.kind = CountKind::exact;
      return r;
    }
  }
  const double L = std::floor(lambda / params.rho);
  r.value = binomial_real(params.n + L, L);
  r.kind = CountKind::asymptotic;
  return r;
}

double gaussian_eigen_lower_bound(int n, std::uint64_t k) {
  require(n >= 1, "dimension n must be at least 1");
  require(k >= 1, "eigenvalue index k must be at least 1");
  const double dn = n;
  const double dk = static_cast<double>(k);
  const double power_branch = dn / std::numbers::e * std::pow(dk, 1.0 / dn) - dn;
  const double log_branch = std::log(dk) / std::log((dn + 1.0) * std::numbers::e);
  return std::max(power_branch, log_branch);
}

double sphere_eigenvalue(int n, double rho, std::uint64_t m) {
  const double dm = static_cast<double>(m);
  return dm * (dm + n - 1.0) * rho / (n - 1.0);
}

std::optional<std::uint64_t> sphere_cumulative_dimension(int n, std::uint64_t m) {
  const auto dn = static_cast<std::uint64_t>(n);
  const auto even = binomial(dn + m, m);
  if (!even) return std::nullopt;
  if (m == 0) return *even;
  const auto odd = binomial(dn + m - 1, m - 1);
  if (!odd || *odd > std::numeric_limits<std::uint64_t>::max() - *even) return std::nullopt;
  return *even + *odd;
}

Spectrum sphere_spectrum(const ModelParams& params, std::uint64_t k_max) {
  validate(params);
  require(params.n >= 2, "sphere spectra require n >= 2");
  validate_k_max(k_max);
  Spectrum s;
  s.exact = true;
  s.k_max = k_max;
  std::uint64_t remaining = k_max;
  std::uint64_t previous = 0;
  for (std::uint64_t m = 0; remaining > 0; ++m) {
    const auto cumulative = sphere_cumulative_dimension(params.n, m);
    const std::optional<std::uint64_t> full =
        cumulative ? std::optional<std::uint64_t>(*cumulative - previous) : std::nullopt;
    const std::uint64_t take = full ? std::min(*full, remaining) : remaining;
    s.entries.push_back({sphere_eigenvalue(params.n, params.rho, m), take});
    remaining -= take;
    if (cumulative) previous = *cumulative;
    if (remaining == 0) {
      s.tail = ModelTail{ModelKind::sphere, params.n, params.rho, m, take};
      s.truncation_note =
          level_note("sphere", m, take, full.value_or(std::numeric_limits<std::uint64_t>::max()));
    }
  }
  return s;
}

CountingResult sphere_count(const ModelParams& params, double lambda) {
  validate(params);
  require(params.n >= 2, "sphere spectra require n >= 2");
  require(std::isfinite(lambda) && lambda >= 0.0, "lambda must be finite and nonnegative");
  CountingResult r;
  r.lambda = lambda;
  // m (m + n - 1) <= lambda (n - 1) / rho, solved then adjusted to match the spectrum exactly.
  const double c = lambda * (params.n - 1.0) / params.rho;
  const double b = params.n - 1.0;
  const double guess = std::floor((-b + std::sqrt(b * b + 4.0 * c)) / 2.0);
  if (guess < 9.0e15) {
    auto m = static_cast<std::uint64_t>(std::max(0.0, guess));
    while (sphere_eigenvalue(params.n, params.rho, m + 1) <= lambda) ++m;
    while (m > 0 && sphere_eigenvalue(params.n, params.rho, m) > lambda) --m;
    if (const auto cum = sphere_cumulative_dimension(params.n, m)) {
      r.exact_count = *cum;
      r.value = static_cast<double>(*cum);
      r.kind = CountKind::exact;
      return r;
    }
  }
  const double m = std::max(0.0, guess);
  r.value = binomial_real(params.n + m, m) + binomial_real(params.n + m - 1.0, m - 1.0);
  r.kind = CountKind::asymptotic;
  return r;
}

CountingResult sphere_count_lower(int n, double lambda) {
  require(n >= 1, "dimension n must be at least 1");
  const double dn = n;
  require(std::isfinite(lambda) && lambda >= dn * dn, "the sphere counting lower bound needs lambda >= n^2");
  CountingResult r;
  r.lambda = lambda;
  r.value = std::pow(std::sqrt(lambda) / dn, dn);
  r.kind = CountKind::lower_bound;
  return r;
}

double nu_p_weyl_coefficient(int n, double p) {
  require(n >= 1, "dimension n must be at least 1");
  require(std::isfinite(p) && p > 1.0, "nu_p Weyl asymptotics need p > 1 (p = 1 has non-discrete spectrum)");
  const double dn = n;
  const double log_c = dn / (p - 1.0) * std::numbers::ln2 +
                       dn * std::lgamma(1.0 / (2.0 * (p - 1.0)) + 1.0) -
                       dn / 2.0 * std::log(std::numbers::pi) -
                       std::lgamma(dn / 2.0 * p / (p - 1.0) + 1.0);
  return std::exp(log_c);
}

CountingResult nu_p_weyl_count(const ModelParams& params, double lambda) {
  require(params.p.has_value(), "nu_p Weyl count needs an exponent p");
  validate(params);
  require(std::isfinite(lambda) && lambda > 0.0, "lambda must be positive");
  const double p = *params.p;
  CountingResult r;
  r.lambda = lambda;
  r.value = nu_p_weyl_coefficient(params.n, p) * std::pow(lambda, params.n / 2.0 * p / (p - 1.0));
  r.kind = CountKind::asymptotic;
  return r;
}

double weyl_phase_volume_1d(const PotentialGrid& pg, double lambda, PhaseDomain domain) {
  const auto& g = pg.grid;
  require(pg.W.size() == g.N && g.N >= 1, "potential grid size does not match its grid");
  require(std::isfinite(lambda), "lambda must be finite");
  const double h = g.h();
  std::optional<std::size_t> first;
  std::size_t last = 0;
  std::vector<double> f(g.N);
  for (std::size_t i = 0; i < g.N; ++i) {
    require(std::isfinite(pg.W[i]), "potential values must be finite");
    f[i] = std::sqrt(std::max(0.0, lambda - pg.W[i]));
    if (pg.W[i] < lambda) {
      if (!first) first = i;
      last = i;
    }
  }
  if (!first) return 0.0;
  if (domain == PhaseDomain::truncated_line) {
    const double xl = g.node(*first);
    const double xr = g.node(last);
    const double width = std::max(xr - xl, h);
    if (xl - g.a < 0.05 * width || g.b - xr < 0.05 * width) {
      throw ValidationError("sublevel set {W < lambda} reaches within 5% of the grid boundary; widen the grid");
    }
  }
  double integral = h * (f.front() + f.back());  // boundary cells [a, x_0] and [x_{N-1}, b]
  for (std::size_t i = 0; i + 1 < g.N; ++i) integral += 0.5 * h * (f[i] + f[i + 1]);
  return integral / std::numbers::pi;
}

}  // namespace spectra
