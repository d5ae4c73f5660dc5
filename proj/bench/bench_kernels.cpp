// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "spectra/discrete_laplacian.hpp"
#include "spectra/sturm.hpp"
#include "spectra/transport.hpp"

using namespace spectra;

namespace {

Tridiagonal hermite_matrix(std::size_t N) {
  return schrodinger_matrix(h_transform_potential(gaussian_measure(1.0), make_grid(-12.0, 12.0, N)));
}

void BM_eigenvalues_serial(benchmark::State& state) {
  const Tridiagonal T = hermite_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::smallest_eigenvalues(T, 20));
}

void BM_eigenvalues_omp(benchmark::State& state) {
  const Tridiagonal T = hermite_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(smallest_eigenvalues(T, 20));
}

void BM_profile_ratios_serial(benchmark::State& state) {
  const MeasureSpec1D a = gaussian_measure(1.0), b = exp_power_measure(4.0);
  const auto v = chebyshev_clustered(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::profile_ratios(a, b, v));
}

void BM_profile_ratios_omp(benchmark::State& state) {
  const MeasureSpec1D a = gaussian_measure(1.0), b = exp_power_measure(4.0);
  const auto v = chebyshev_clustered(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(profile_ratios(a, b, v));
}

}  // namespace

BENCHMARK(BM_eigenvalues_serial)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_eigenvalues_omp)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_profile_ratios_serial)->Arg(512)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_profile_ratios_omp)->Arg(512)->Arg(4096)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
