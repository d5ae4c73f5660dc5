#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "spectra/comparison.hpp"
#include "spectra/discrete_laplacian.hpp"
#include "spectra/errors.hpp"
#include "spectra/expression.hpp"
#include "spectra/model_spectra.hpp"

using namespace spectra;

namespace {

Grid1D union_grid(const MeasureSpec1D& a, const MeasureSpec1D& b, std::size_t N) {
  return make_grid(std::min(a.bulk.lo, b.bulk.lo), std::max(a.bulk.hi, b.bulk.hi), N);
}

double worst_relative_shortfall(const ComparisonReport& r) {
  double worst = 0.0;
  for (const auto& row : r.rows) {
    if (row.rhs > 0.0) worst = std::max(worst, (row.rhs - row.lhs) / row.rhs);
  }
  return worst;
}

}  // namespace

TEST_CASE("identity map gives zero margins") {
  const MeasureSpec1D g = gaussian_measure(1.0);
  const ComparisonReport r = check_contraction_ordering(g, g, 1.0);
  CHECK(r.passed);
  CHECK(r.k_checked == kDefaultComparisonK);
  for (const auto& row : r.rows) CHECK(row.margin == 0.0);
}

TEST_CASE("Gaussian to the quartic potential through its profile constant") {
  const MeasureSpec1D g = gaussian_measure(1.0);
  const MeasureSpec1D q = parse_measure("potential:x^2/2+x^4/4");
  const ComparisonReport r = check_profile_ordering(g, q, 20);
  CHECK(r.passed);
  REQUIRE(r.lipschitz.has_value());
  CHECK(*r.lipschitz <= 1.0);
  // With L <= 1 the ordering implies the plain one lambda_k(target) >= lambda_k(gamma).
  for (const auto& row : r.rows) CHECK(row.lhs >= row.rhs * *r.lipschitz * *r.lipschitz * (1 - kDefaultComparisonTol));
}

TEST_CASE("Gaussian dilation saturates the contraction principle") {
  const ComparisonReport r = check_contraction_ordering(gaussian_measure(1.0), gaussian_measure(0.25), 2.0);
  CHECK(r.passed);
  for (const auto& row : r.rows) {
    if (row.k > 1) CHECK(row.lhs == doctest::Approx(row.rhs).epsilon(kDefaultComparisonTol));
  }
}

TEST_CASE("profile ordering examples") {
  const MeasureSpec1D g = gaussian_measure(1.0);
  const MeasureSpec1D nu4 = exp_power_measure(4.0);
  const ComparisonReport self = check_profile_ordering(g, g);
  CHECK(self.passed);
  CHECK(*self.lipschitz == doctest::Approx(1.0).epsilon(1e-8));
  const ComparisonReport fwd = check_profile_ordering(g, nu4);
  CHECK(fwd.passed);
  REQUIRE(fwd.lipschitz.has_value());
  CHECK(std::isfinite(*fwd.lipschitz));
  // The reverse map has T' growing without bound in the tails: no finite claim.
  const ComparisonReport rev = check_profile_ordering(nu4, g);
  CHECK(rev.passed);
  CHECK_FALSE(rev.lipschitz.has_value());
  CHECK(rev.rows.empty());
  CHECK_FALSE(rev.warnings.empty());
}

TEST_CASE("a too-small constant is reported as violations") {
  const ComparisonReport r = check_contraction_ordering(gaussian_measure(1.0), gaussian_measure(0.25), 1.5, 10);
  CHECK_FALSE(r.passed);
  CHECK(r.violations.size() == 9u);  // every k >= 2
  for (const auto& v : r.violations) {
    CHECK(v.lhs < v.rhs * (1 - r.tolerance));
    CHECK(v.margin < 0.0);
  }
}

TEST_CASE("sphere versus Gaussian counterexample") {
  CHECK(sphere_gaussian_counterexample(3) == std::pair<double, double>{1.5, 2.0});
  const auto [s10, g10] = sphere_gaussian_counterexample(10);
  CHECK(s10 == doctest::Approx(10.0 / 9.0).epsilon(1e-15));
  CHECK(g10 == 2.0);
  CHECK(sphere_gaussian_counterexample(5000).first == doctest::Approx(1.0).epsilon(1e-3));
  CHECK_THROWS_AS(sphere_gaussian_counterexample(2), ValidationError);
}

TEST_CASE("Berard-Gallot trace comparison") {
  const std::vector<double> ts = {0.05, 0.3, 1.0, 3.0, 10.0};
  SUBCASE("reflexive case") {
    const ComparisonReport r = berard_gallot_trace_check(3, 2.0, ts);
    CHECK(r.passed);
    for (const auto& row : r.rows) CHECK(row.margin == 0.0);
  }
  SUBCASE("shifted spectrum is strictly smaller") {
    Spectrum shifted = sphere_spectrum({3, 2.0}, 2000);
    for (auto& e : shifted.entries) e.value += 0.1;
    shifted.tail.reset();
    const ComparisonReport r = berard_gallot_trace_check(3, 2.0, ts, shifted);
    CHECK(r.passed);
    for (const auto& row : r.rows) CHECK(row.margin > 0.0);
    CHECK_FALSE(r.warnings.empty());
  }
  SUBCASE("ground state dominates at large t") {
    const double big[] = {60.0};
    const ComparisonReport r = berard_gallot_trace_check(4, 3.0, big);
    CHECK(r.rows[0].lhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.rows[0].rhs == doctest::Approx(1.0).epsilon(1e-12));
  }
}

// Properties

TEST_CASE("property: transitivity along Gaussian dilation chains") {
  const std::size_t K = 50;
  const Spectrum a = gaussian_spectrum({1, 1.0}, K);
  const Spectrum b = gaussian_spectrum({1, 0.5}, K);
  const Spectrum c = gaussian_spectrum({1, 0.125}, K);
  const double L1 = std::sqrt(2.0), L2 = 2.0;
  const bool ab = check_spectrum_ordering(a, b, L1, K, 1e-12).passed;
  const bool bc = check_spectrum_ordering(b, c, L2, K, 1e-12).passed;
  CHECK(ab);
  CHECK(bc);
  CHECK(check_spectrum_ordering(a, c, L1 * L2, K, 1e-12).passed);
  CHECK_FALSE(check_spectrum_ordering(a, c, 0.9 * L1 * L2, K, 1e-12).passed);
}

TEST_CASE("property: discretization shortfalls vanish under refinement") {
  const MeasureSpec1D g = gaussian_measure(1.0);
  // The narrower target is resolved by fewer nodes, so at tol = 0 it shows
  // spurious violations of the exact dilation identity.
  const MeasureSpec1D narrow = gaussian_measure(4.0);
  std::vector<double> shortfall;
  for (std::size_t N : {250u, 500u, 1000u}) {
    shortfall.push_back(worst_relative_shortfall(check_contraction_ordering(g, narrow, 0.5, 10, 0.0, {N, 0.0})));
  }
  CHECK(shortfall[0] > 0.0);
  CHECK(shortfall[1] < shortfall[0] / 3.0);
  CHECK(shortfall[2] < shortfall[1] / 3.0);
}

TEST_CASE("property: a passing ordering implies the trace ordering") {
  const MeasureSpec1D g = gaussian_measure(1.0);
  for (const char* target : {"potential:x^2/2+x^4/4", "exppower:4", "gaussian:3"}) {
    const MeasureSpec1D t = parse_measure(target);
    const ComparisonReport r = check_profile_ordering(g, t, 20);
    REQUIRE(r.passed);
    REQUIRE(r.lipschitz.has_value());
    const Grid1D grid = union_grid(g, t, 4000);
    const Spectrum s1 = solve_weighted_neumann(g, grid, 20);
    const Spectrum s2 = solve_weighted_neumann(t, grid, 20);
    const std::vector<double> ts = {0.05, 0.2, 0.5, 1.0, 2.0, 5.0};
    CHECK_MESSAGE(check_trace_ordering(s1, s2, *r.lipschitz, 20, ts, kDefaultComparisonTol).passed, target);
  }
}

TEST_CASE("property: passed is equivalent to an empty violation list") {
  const MeasureSpec1D g = gaussian_measure(1.0);
  for (double L : {1.0, 1.5, 2.0, 2.5}) {
    const ComparisonReport r = check_contraction_ordering(g, gaussian_measure(0.25), L, 8, kDefaultComparisonTol, {1000, 0.0});
    CHECK(r.passed == r.violations.empty());
    CHECK(r.passed == (L >= 2.0));
  }
}
