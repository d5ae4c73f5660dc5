#include "spectra/spectrum.hpp"

#include <cmath>

#include "spectra/errors.hpp"

namespace spectra {

double Spectrum::lambda(std::uint64_t k) const {
  require(k >= 1, "eigenvalue index is 1-based");
  std::uint64_t seen = 0;
  for (const auto& e : entries) {
    seen += e.mult;
    if (k <= seen) return e.value;
  }
  throw ValidationError("eigenvalue index " + std::to_string(k) + " exceeds represented range " +
                        std::to_string(k_max));
}

std::uint64_t Spectrum::count_le(double threshold) const {
  std::uint64_t c = 0;
  for (const auto& e : entries) {
    if (e.value > threshold) break;
    c += e.mult;
  }
  return c;
}

std::vector<double> Spectrum::expanded() const {
  std::vector<double> out;
  out.reserve(k_max);
  for (const auto& e : entries) out.insert(out.end(), e.mult, e.value);
  return out;
}

void check_invariants(const Spectrum& s) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    const auto& e = s.entries[i];
    require(std::isfinite(e.value), "spectrum contains a non-finite eigenvalue");
    require(e.mult >= 1, "spectrum multiplicities must be positive");
    if (i > 0) require(e.value > s.entries[i - 1].value, "spectrum levels must be strictly increasing");
    total += e.mult;
  }
  require(total == s.k_max, "sum of multiplicities must equal k_max");
}

Spectrum spectrum_from_values(std::span<const double> ascending, bool exact) {
  Spectrum s;
  s.exact = exact;
  for (double v : ascending) {
    if (!s.entries.empty() && s.entries.back().value == v) {
      ++s.entries.back().mult;
    } else {
      require(s.entries.empty() || v > s.entries.back().value, "values must be ascending");
      s.entries.push_back({v, 1});
    }
  }
  s.k_max = ascending.size();
  return s;
}

Spectrum cluster_levels(const Spectrum& s, double gap) {
  Spectrum out = s;
  out.entries.clear();
  double sum = 0.0;
  std::uint64_t mult = 0;
  double last = 0.0;
  auto flush = [&] {
    if (mult > 0) out.entries.push_back({sum / static_cast<double>(mult), mult});
    sum = 0.0;
    mult = 0;
  };
  for (const auto& e : s.entries) {
    if (mult > 0 && e.value - last >= gap) flush();
    sum += e.value * static_cast<double>(e.mult);
    mult += e.mult;
    last = e.value;
  }
  flush();
  return out;
}

}  // namespace spectra
