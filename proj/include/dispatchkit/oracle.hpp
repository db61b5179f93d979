#pragma once

// Exhaustive grid-search reference for validating the dispatch solvers.
// Deliberately dumb: enumerate the per-customer box on a uniform grid,
// filter by the clearing constraint, keep the best objective value. Shares
// nothing with the dual-bisection path except the cost function itself.

#include "dispatchkit/core.hpp"

namespace dispatchkit {

enum class ClearingMode {
    Equality,  ///< |sum e_i - demand| <= resolution / 2
    Relaxed    ///< sum e_i <= demand
};

/// Grid-search minimizer of the active objective: total cost in Equality
/// mode, lambda*cost - (1-lambda)*energy in Relaxed mode (lambda taken
/// from the problem). Each customer's grid runs from t*p_min to t*p_max
/// in `resolution_kwh` steps, with the upper endpoint always included.
///
/// Guards: at most 4 customers and at most 1e8 grid points, else
/// InputError. The result carries no dual certificate: its
/// coupling_multiplier and kkt_residual are NaN.
DispatchSolution brute_force_oracle(const DispatchProblem& problem,
                                    double resolution_kwh, ClearingMode mode);

}  // namespace dispatchkit
