#pragma once

// Problem-file ingestion and emission. The on-disk format is JSON with
// unit-suffixed power fields:
//
//   {
//     "horizon_t": 1.0,            // hours
//     "demand_e": 700.0,           // kWh
//     "lambda": 0.5,               // optional, defaults to 0.5
//     "customers": [
//       { "id": "PC1", "p_min_kw": 30.0, "p_max_kw": 60.0,
//         "c0": 96.6, "c1": 7.588, "c2": 0.0414 },
//       ...
//     ]
//   }
//
// Unknown fields are rejected; errors name the offending field path.

#include <filesystem>
#include <string>

#include "dispatchkit/core.hpp"

namespace dispatchkit {

/// Parse a problem from JSON text. Throws InputError with a field path on
/// any structural or semantic problem.
DispatchProblem parse_problem(const std::string& json_text);

/// Serialize to the same JSON schema parse_problem accepts; the round
/// trip is exact (shortest round-trip float printing).
std::string serialize_problem(const DispatchProblem& problem);

DispatchProblem load_problem(const std::filesystem::path& path);
void save_problem(const DispatchProblem& problem, const std::filesystem::path& path);

}  // namespace dispatchkit
