#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace spectra {

/// One distinct eigenvalue and how many times it is repeated.
struct Level {
  double value = 0.0;
  std::uint64_t mult = 1;

  friend bool operator==(const Level&, const Level&) = default;
};

enum class ModelKind { gaussian, sphere };

/// Describes the omitted part of a closed-form model spectrum so that spectral
/// sums (heat traces) can be completed beyond the represented entries.
struct ModelTail {
  ModelKind kind = ModelKind::gaussian;
  int n = 1;
  double rho = 1.0;
  std::uint64_t level = 0;        // degree of the last represented level
  std::uint64_t represented = 0;  // how many copies of that level are represented
};

/// Sorted eigenvalues with multiplicities: lambda_1 <= lambda_2 <= ... counted
/// with multiplicity, stored as strictly increasing distinct levels.
struct Spectrum {
  std::vector<Level> entries;
  bool exact = false;
  std::uint64_t k_max = 0;
  std::optional<std::string> truncation_note;
  std::optional<ModelTail> tail;

  /// lambda_k with 1-based k, counted with multiplicity.
  double lambda(std::uint64_t k) const;
  /// Number of represented eigenvalues <= threshold, with multiplicity.
  std::uint64_t count_le(double threshold) const;
  /// All represented eigenvalues, each repeated by multiplicity.
  std::vector<double> expanded() const;
  bool empty() const { return entries.empty(); }
};

/// Throws ValidationError when the Spectrum invariants do not hold.
void check_invariants(const Spectrum& s);

/// Builds a discretized spectrum from ascending values. Every value gets
/// multiplicity 1, except bit-identical neighbours which are merged.
Spectrum spectrum_from_values(std::span<const double> ascending, bool exact);

/// Groups levels whose consecutive gap is below `gap` into a single level
/// (value of the cluster mean). Display helper for discretized spectra.
Spectrum cluster_levels(const Spectrum& s, double gap = 1e-6);

}  // namespace spectra
