#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spectra::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitComparisonFailed = 3;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Grid size used when --N is absent: SPECTRA_GRID_N if set, else 4000.
std::size_t default_grid_size();

}  // namespace spectra::cli
