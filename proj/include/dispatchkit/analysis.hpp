#pragma once

// Parameter sweeps over the dispatch solvers and Pareto-frontier
// extraction. Grid points are evaluated in order; every row stores the
// full solution so downstream tables and plots can show per-customer
// trajectories, not just totals.

#include <vector>

#include "dispatchkit/core.hpp"
#include "dispatchkit/solver.hpp"

namespace dispatchkit {

enum class SweepParameter { Lambda, Demand };

struct SweepSpec {
    SweepParameter parameter;
    double start;
    double stop;
    double step;  ///< > 0; the grid is start, start + step, ..., <= stop
};

struct SweepRow {
    double parameter;  ///< swept value: lambda, or demand in kWh
    DispatchSolution solution;
};

struct SweepResult {
    std::vector<SweepRow> rows;  ///< ordered by parameter value
    /// Sampled parameter values at which some customer's bound status
    /// differs from the previous sample. No sub-grid refinement: the
    /// reported value is the first sample past the true transition.
    std::vector<double> breakpoints;
};

/// Multiobjective dispatch at every lambda grid point, demand fixed.
/// A failing grid point aborts the sweep; the offending lambda is named
/// in the rethrown error.
SweepResult sweep_lambda(const DispatchProblem& problem, const SweepSpec& spec,
                         const SolverConfig& cfg = {});

/// Least-cost equality dispatch at every demand grid point. Every grid
/// point must lie in the EqualityFeasible band [capacity_min, capacity_max];
/// the first one outside aborts with an InfeasibleError naming it.
SweepResult sweep_demand(const DispatchProblem& problem, const SweepSpec& spec,
                         const SolverConfig& cfg = {});

/// One frontier sample per grid lambda, sorted by lambda, with runs of
/// identical (cost, energy) outcomes collapsed into a single point whose
/// [lambda, lambda_hi] records the plateau.
std::vector<ParetoPoint> pareto_frontier(const DispatchProblem& problem,
                                         const std::vector<double>& lambda_grid,
                                         const SolverConfig& cfg = {});

}  // namespace dispatchkit
