#pragma once

// The three dispatch problems over one customer fleet:
//
//   cost         minimize sum C_i(e_i)            s.t. box, sum e_i  = demand
//   resilience   maximize sum e_i                 s.t. box, sum e_i <= demand
//   multiobjective
//                minimize lambda * sum C_i(e_i)
//                         - (1 - lambda) * sum e_i  s.t. box, sum e_i <= demand
//
// All three are separable with a single coupling constraint, so the exact
// solution is a one-dimensional search on the coupling dual: each customer
// responds to a price through inverse_marginal_cost, and bisection drives
// the aggregate response onto the constraint.

#include "dispatchkit/core.hpp"

namespace dispatchkit {

struct SolverConfig {
    double bisection_tol = 1e-9;  ///< kWh tolerance on the coupling residual
    int max_iters = 200;          ///< dual bisection iteration cap
    double kkt_tol = 1e-6;        ///< max stationarity residual to accept
};

/// Least-cost dispatch under the market-clearing equality.
/// Requires the EqualityFeasible regime; throws InfeasibleError otherwise.
/// Interior customers share one marginal cost, the returned
/// coupling_multiplier.
DispatchSolution solve_cost_dispatch(const DispatchProblem& problem,
                                     const SolverConfig& cfg = {});

/// Maximum-energy dispatch under the relaxed clearing constraint
/// sum e_i <= demand. In the Deficit regime the optimum is unique: every
/// customer at its upper bound. Otherwise the maximizers form a continuum,
/// and the returned representative is the least-cost dispatch pinned to
/// sum e_i = min(demand, capacity_max).
DispatchSolution solve_resilience_dispatch(const DispatchProblem& problem,
                                           const SolverConfig& cfg = {});

/// Scalarized trade-off between cost and delivered energy, weight
/// problem.lambda. lambda = 0 reduces exactly to the resilience dispatch
/// and is delegated there; lambda = 1 is pure cost minimization and pins
/// every customer at its minimum.
DispatchSolution solve_multiobjective(const DispatchProblem& problem,
                                      const SolverConfig& cfg = {});

/// True iff the pure-cost dispatch (lambda = 1) lands every customer at
/// t * p_min within 1e-9 kWh. Monotone costs make this a certainty; the
/// check exists so callers can certify it on their own fleet.
bool verify_pure_cost_minimum(const DispatchProblem& problem,
                              const SolverConfig& cfg = {});

}  // namespace dispatchkit
