#include "spectra/discrete_laplacian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "spectra/errors.hpp"
#include "spectra/model_spectra.hpp"

namespace spectra {

namespace {

std::string grid_note(const Grid1D& g) {
  return "discretized on " + std::to_string(g.N) + " interior nodes over [" + std::to_string(g.a) + ", " +
         std::to_string(g.b) + "]";
}

double level_multiplicity(const ModelTail& tail, std::uint64_t level) {
  if (tail.kind == ModelKind::gaussian) {
    const auto n = static_cast<std::uint64_t>(tail.n);
    if (const auto c = binomial(n - 1 + level, level)) return static_cast<double>(*c);
    return binomial_real(tail.n - 1.0 + level, static_cast<double>(level));
  }
  const auto hi = sphere_cumulative_dimension(tail.n, level);
  const auto lo = level == 0 ? std::optional<std::uint64_t>(0) : sphere_cumulative_dimension(tail.n, level - 1);
  if (hi && lo) return static_cast<double>(*hi - *lo);
  const double m = static_cast<double>(level);
  const double n = tail.n;
  return binomial_real(n + m, m) - binomial_real(n + m - 2.0, m - 2.0);
}

double level_value(const ModelTail& tail, std::uint64_t level) {
  if (tail.kind == ModelKind::gaussian) return tail.rho * static_cast<double>(level);
  return sphere_eigenvalue(tail.n, tail.rho, level);
}

double model_tail_sum(const ModelTail& tail, double t, double partial) {
  double sum = (level_multiplicity(tail, tail.level) - static_cast<double>(tail.represented)) *
               std::exp(-t * level_value(tail, tail.level));
  double previous = std::numeric_limits<double>::infinity();
  for (std::uint64_t m = tail.level + 1; m < tail.level + 100'000'000; ++m) {
    const double term = level_multiplicity(tail, m) * std::exp(-t * level_value(tail, m));
    sum += term;
    if (term <= previous && term <= 1e-18 * (partial + sum)) return sum;
    previous = term;
  }
  throw NumericalError("heat trace tail did not converge; t is too small");
}

void add_confinement_warning(Spectrum& s, double wall, double top) {
  if (wall - top < std::max(1.0, 0.25 * std::abs(top))) {
    *s.truncation_note += "; warning: W at the grid ends (" + std::to_string(wall) +
                          ") does not confine the largest eigenvalue (" + std::to_string(top) + ")";
  }
}

double h_transform_at(const MeasureSpec1D& spec, double x) {
  const double d1 = spec.dV(x);
  return 0.25 * d1 * d1 - 0.5 * spec.d2V(x);
}

}  // namespace

double end_wall(const MeasureSpec1D& spec, const Grid1D& grid) {
  const Grid1D g = make_grid(grid.a, grid.b, grid.N);
  return std::min(h_transform_at(spec, g.node(0)), h_transform_at(spec, g.node(g.N - 1)));
}

PotentialGrid h_transform_potential(const MeasureSpec1D& spec, const Grid1D& grid) {
  const Grid1D g = make_grid(grid.a, grid.b, grid.N);
  const double h = g.h();
  const auto* power = std::get_if<ExpPowerFamily>(&spec.family);
  const bool singular_at_origin = power && power->p < 2.0;
  PotentialGrid out{g, std::vector<double>(g.N)};
  for (std::size_t i = 0; i < g.N; ++i) {
    double x = g.node(i);
    if (singular_at_origin && std::abs(x) < 0.25 * h) x += 0.5 * h;
    const double w = h_transform_at(spec, x);
    if (!std::isfinite(w)) {
      throw NumericalError("h-transform potential is not finite at x = " + std::to_string(x));
    }
    out.W[i] = w;
  }
  return out;
}

Tridiagonal schrodinger_matrix(const PotentialGrid& pg) {
  require(pg.W.size() == pg.grid.N, "potential grid size does not match its grid");
  const double inv_h2 = 1.0 / (pg.grid.h() * pg.grid.h());
  Tridiagonal T;
  T.diag.resize(pg.grid.N);
  for (std::size_t i = 0; i < pg.grid.N; ++i) T.diag[i] = 2.0 * inv_h2 + pg.W[i];
  T.off.assign(pg.grid.N - 1, -inv_h2);
  return T;
}

Spectrum solve_schrodinger_dirichlet(const PotentialGrid& pg, std::size_t k_max) {
  require(k_max >= 1, "k_max must be at least 1");
  require(k_max <= pg.grid.N, "k_max exceeds the number of grid nodes");
  const auto values = smallest_eigenvalues(schrodinger_matrix(pg), k_max, kBisectionTol);
  Spectrum s = spectrum_from_values(values, false);
  s.truncation_note = grid_note(pg.grid);
  add_confinement_warning(s, std::min(pg.W.front(), pg.W.back()), values.back());
  return s;
}

Tridiagonal weighted_neumann_matrix(const MeasureSpec1D& spec, const Grid1D& grid) {
  const Grid1D g = make_grid(grid.a, grid.b, grid.N);
  const double h = g.h();
  const double inv_h2 = 1.0 / (h * h);
  std::vector<double> v(g.N);
  bool any_weight = false;
  for (std::size_t i = 0; i < g.N; ++i) {
    v[i] = spec.V(g.node(i));
    if (!std::isfinite(v[i])) throw NumericalError("V is not finite at x = " + std::to_string(g.node(i)));
    any_weight = any_weight || std::exp(-v[i] - spec.log_normalizer) > 0.0;
  }
  if (!any_weight) {
    throw ValidationError("all weights exp(-V) underflow on [" + std::to_string(g.a) + ", " +
                          std::to_string(g.b) + "]; the grid misses the bulk of the measure");
  }
  Tridiagonal T;
  T.diag.assign(g.N, 0.0);
  T.off.resize(g.N - 1);
  for (std::size_t i = 0; i + 1 < g.N; ++i) {
    const double vm = spec.V(g.node(i) + 0.5 * h);
    if (!std::isfinite(vm)) throw NumericalError("V is not finite between grid nodes");
    T.diag[i] += std::exp(v[i] - vm) * inv_h2;
    T.diag[i + 1] += std::exp(v[i + 1] - vm) * inv_h2;
    T.off[i] = -std::exp(0.5 * (v[i] + v[i + 1]) - vm) * inv_h2;
  }
  return T;
}

Spectrum solve_weighted_neumann(const MeasureSpec1D& spec, const Grid1D& grid, std::size_t k_max) {
  require(k_max >= 1, "k_max must be at least 1");
  require(k_max <= grid.N, "k_max exceeds the number of grid nodes");
  auto values = smallest_eigenvalues(weighted_neumann_matrix(spec, grid), k_max, kBisectionTol);
  if (std::abs(values.front()) < 1e-9) values.front() = 0.0;
  Spectrum s = spectrum_from_values(values, false);
  s.truncation_note = grid_note(grid);
  add_confinement_warning(s, end_wall(spec, grid), values.back());
  return s;
}

HeatTrace heat_trace(const Spectrum& spectrum, double t) {
  require(std::isfinite(t) && t > 0.0, "heat trace needs t > 0");
  require(!spectrum.empty(), "heat trace of an empty spectrum");
  HeatTrace z;
  for (const auto& e : spectrum.entries) z.partial += static_cast<double>(e.mult) * std::exp(-t * e.value);
  if (spectrum.exact && spectrum.tail) {
    z.tail = model_tail_sum(*spectrum.tail, t, z.partial);
    z.value = z.partial + *z.tail;
  } else {
    z.value = z.partial;
    z.truncated_lower_estimate = true;
  }
  return z;
}

}  // namespace spectra
