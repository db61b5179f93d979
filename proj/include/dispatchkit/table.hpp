#pragma once

// Delimited result tables: comma-separated, UTF-8, LF line endings,
// mandatory header row, numeric fields with 6 decimal places. Identical
// inputs render byte-identical text.

#include <filesystem>
#include <string>
#include <vector>

#include "dispatchkit/analysis.hpp"
#include "dispatchkit/core.hpp"

namespace dispatchkit {

/// Header `PC1,...,total_energy_kwh,total_cost,coupling_multiplier` plus
/// one row for a single solve.
std::string render_solution_table(const std::vector<std::string>& customer_ids,
                                  const DispatchSolution& solution);

/// Same columns prefixed by the swept parameter, one row per grid point.
/// `parameter_name` becomes the first header cell ("lambda" or "demand_e").
std::string render_sweep_table(const std::string& parameter_name,
                               const std::vector<std::string>& customer_ids,
                               const SweepResult& result);

/// Columns lambda_lo,lambda_hi,total_cost,total_energy_kwh; one row per
/// collapsed frontier point.
std::string render_pareto_table(const std::vector<ParetoPoint>& frontier);

/// Write-temp-then-rename so readers never observe a half-written file.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content);

}  // namespace dispatchkit
