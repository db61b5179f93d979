#include "dispatchkit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace dispatchkit {

namespace {

constexpr std::size_t kMaxCustomers = 4;
constexpr double kMaxGridPoints = 1e8;

struct Axis {
    std::vector<double> energy_kwh;  // grid values, lo .. hi inclusive
    std::vector<double> objective;   // per-customer objective at each value
};

}  // namespace

DispatchSolution brute_force_oracle(const DispatchProblem& problem,
                                    double resolution_kwh, ClearingMode mode) {
    if (!(resolution_kwh > 0.0) || !std::isfinite(resolution_kwh)) {
        throw InputError("oracle: resolution must be finite and > 0 kWh");
    }
    const std::size_t n = problem.size();
    if (n > kMaxCustomers) {
        throw InputError("oracle: at most " + std::to_string(kMaxCustomers) +
                         " customers supported, got " + std::to_string(n));
    }

    const double t = problem.horizon_t;
    const double lambda = problem.lambda;

    // Size the grid before materializing anything so an oversized request
    // fails fast instead of exhausting memory.
    std::vector<std::size_t> axis_steps(n);
    double grid_points = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& pc = problem.customers[i];
        const double span = t * (pc.p_max_kw - pc.p_min_kw);
        axis_steps[i] = static_cast<std::size_t>(
            std::ceil(span / resolution_kwh - 1e-12));
        grid_points *= static_cast<double>(axis_steps[i] + 1);
    }
    if (grid_points > kMaxGridPoints) {
        throw InputError("oracle: grid of " + std::to_string(grid_points) +
                         " points exceeds the 1e8 guard; coarsen the resolution");
    }

    std::vector<Axis> axes(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& pc = problem.customers[i];
        const double lo = t * pc.p_min_kw;
        const double hi = t * pc.p_max_kw;
        axes[i].energy_kwh.reserve(axis_steps[i] + 1);
        for (std::size_t k = 0; k < axis_steps[i]; ++k) {
            axes[i].energy_kwh.push_back(lo + static_cast<double>(k) * resolution_kwh);
        }
        axes[i].energy_kwh.push_back(hi);
    }

    for (std::size_t i = 0; i < n; ++i) {
        const auto& pc = problem.customers[i];
        axes[i].objective.reserve(axes[i].energy_kwh.size());
        for (const double e : axes[i].energy_kwh) {
            const double cost = evaluate_cost(pc, e, t);
            axes[i].objective.push_back(
                mode == ClearingMode::Equality ? cost
                                               : lambda * cost - (1.0 - lambda) * e);
        }
    }

    // Equality matches the demand to the nearest half-step so that exactly
    // one grid slice qualifies when demand sits on the grid; the epsilon
    // absorbs float noise in the accumulated sums.
    const double slack = 1e-12 * std::max(1.0, std::abs(problem.demand_e));
    const double equality_window = 0.5 * resolution_kwh + slack;

    double best_objective = std::numeric_limits<double>::infinity();
    std::vector<double> best(n, 0.0);
    std::vector<std::size_t> index(n, 0);

    // Depth-first enumeration; the innermost axis is a flat loop.
    const auto scan_last = [&](double partial_e, double partial_obj,
                               std::size_t last) {
        const auto& axis = axes[last];
        const std::size_t count = axis.energy_kwh.size();
        for (std::size_t k = 0; k < count; ++k) {
            const double total_e = partial_e + axis.energy_kwh[k];
            if (mode == ClearingMode::Equality) {
                if (std::abs(total_e - problem.demand_e) > equality_window) continue;
            } else {
                if (total_e > problem.demand_e + slack) continue;
            }
            const double obj = partial_obj + axis.objective[k];
            if (obj < best_objective) {
                best_objective = obj;
                index[last] = k;
                for (std::size_t i = 0; i < n; ++i) {
                    best[i] = axes[i].energy_kwh[index[i]];
                }
            }
        }
    };

    const std::function<void(std::size_t, double, double)> recurse =
        [&](std::size_t depth, double partial_e, double partial_obj) {
            if (depth == n - 1) {
                scan_last(partial_e, partial_obj, depth);
                return;
            }
            const std::size_t count = axes[depth].energy_kwh.size();
            for (std::size_t k = 0; k < count; ++k) {
                index[depth] = k;
                recurse(depth + 1, partial_e + axes[depth].energy_kwh[k],
                        partial_obj + axes[depth].objective[k]);
            }
        };
    recurse(0, 0.0, 0.0);

    if (!std::isfinite(best_objective)) {
        throw InfeasibleError(
            "oracle: no grid point satisfies the clearing constraint at demand " +
            std::to_string(problem.demand_e) + " kWh");
    }

    DispatchSolution sol;
    sol.energies_kwh = best;
    sol.total_energy_kwh = 0.0;
    sol.total_cost = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sol.total_energy_kwh += best[i];
        sol.total_cost += evaluate_cost(problem.customers[i], best[i], t);
        const double lo = t * problem.customers[i].p_min_kw;
        const double hi = t * problem.customers[i].p_max_kw;
        if (best[i] <= lo) {
            sol.bound_status.push_back(BoundStatus::AtLower);
        } else if (best[i] >= hi) {
            sol.bound_status.push_back(BoundStatus::AtUpper);
        } else {
            sol.bound_status.push_back(BoundStatus::Interior);
        }
    }
    sol.coupling_multiplier = std::numeric_limits<double>::quiet_NaN();
    sol.kkt_residual = std::numeric_limits<double>::quiet_NaN();
    return sol;
}

}  // namespace dispatchkit
