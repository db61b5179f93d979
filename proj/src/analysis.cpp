#include "dispatchkit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace dispatchkit {

namespace {

std::vector<double> grid_values(const SweepSpec& spec) {
    if (!(spec.step > 0.0) || !std::isfinite(spec.step)) {
        throw InputError("sweep: step must be finite and > 0");
    }
    if (!std::isfinite(spec.start) || !std::isfinite(spec.stop) ||
        spec.start > spec.stop) {
        throw InputError("sweep: need start <= stop, got [" +
                         std::to_string(spec.start) + ", " +
                         std::to_string(spec.stop) + "]");
    }
    // start + k*step, not accumulation, so long sweeps don't drift.
    const auto count = static_cast<std::size_t>(
        std::floor((spec.stop - spec.start) / spec.step + 1e-9)) + 1;
    std::vector<double> values;
    values.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        values.push_back(spec.start + static_cast<double>(k) * spec.step);
    }
    // Rounding in start + k*step can overshoot stop by an ulp; pin the last
    // sample so range checks downstream (e.g. lambda <= 1) stay exact.
    if (values.back() > spec.stop) values.back() = spec.stop;
    return values;
}

void detect_breakpoints(SweepResult& result) {
    for (std::size_t r = 1; r < result.rows.size(); ++r) {
        if (result.rows[r].solution.bound_status !=
            result.rows[r - 1].solution.bound_status) {
            result.breakpoints.push_back(result.rows[r].parameter);
        }
    }
}

}  // namespace

SweepResult sweep_lambda(const DispatchProblem& problem, const SweepSpec& spec,
                         const SolverConfig& cfg) {
    if (spec.parameter != SweepParameter::Lambda) {
        throw InputError("sweep_lambda: spec.parameter must be Lambda");
    }
    if (spec.start < 0.0 || spec.stop > 1.0) {
        throw InputError("sweep_lambda: range must lie within [0, 1]");
    }
    SweepResult result;
    const auto values = grid_values(spec);
    result.rows.reserve(values.size());
    for (const double lambda : values) {
        try {
            result.rows.push_back({lambda, solve_multiobjective(
                                               problem.with_lambda(lambda), cfg)});
        } catch (const DispatchError& err) {
            throw NumericalError("sweep_lambda: point lambda = " +
                                 std::to_string(lambda) + " failed: " + err.what());
        }
    }
    detect_breakpoints(result);
    return result;
}

SweepResult sweep_demand(const DispatchProblem& problem, const SweepSpec& spec,
                         const SolverConfig& cfg) {
    if (spec.parameter != SweepParameter::Demand) {
        throw InputError("sweep_demand: spec.parameter must be Demand");
    }
    SweepResult result;
    const auto values = grid_values(spec);
    result.rows.reserve(values.size());
    for (const double demand : values) {
        const DispatchProblem point = problem.with_demand(demand);
        if (classify_regime(point).regime != Regime::EqualityFeasible) {
            throw InfeasibleError(
                "sweep_demand: grid point " + std::to_string(demand) +
                " kWh lies outside the feasible band [" +
                std::to_string(point.capacity_min_kwh()) + ", " +
                std::to_string(point.capacity_max_kwh()) + "] kWh");
        }
        result.rows.push_back({demand, solve_cost_dispatch(point, cfg)});
    }
    detect_breakpoints(result);
    return result;
}

std::vector<ParetoPoint> pareto_frontier(const DispatchProblem& problem,
                                         const std::vector<double>& lambda_grid,
                                         const SolverConfig& cfg) {
    if (lambda_grid.empty()) {
        throw InputError("pareto_frontier: empty lambda grid");
    }
    std::vector<double> grid = lambda_grid;
    std::sort(grid.begin(), grid.end());
    for (const double lambda : grid) {
        if (!std::isfinite(lambda) || lambda < 0.0 || lambda > 1.0) {
            throw InputError("pareto_frontier: grid value " + std::to_string(lambda) +
                             " outside [0, 1]");
        }
    }

    std::vector<ParetoPoint> frontier;
    for (const double lambda : grid) {
        DispatchSolution sol = solve_multiobjective(problem.with_lambda(lambda), cfg);
        // Plateau samples come out bit-identical (all-clamped solutions are
        // exact bound sums), so exact comparison is the right collapse test.
        if (!frontier.empty() && frontier.back().total_cost == sol.total_cost &&
            frontier.back().total_energy_kwh == sol.total_energy_kwh) {
            frontier.back().lambda_hi = lambda;
            continue;
        }
        frontier.push_back({lambda, lambda, sol.total_cost, sol.total_energy_kwh,
                            std::move(sol.energies_kwh)});
    }
    return frontier;
}

}  // namespace dispatchkit
