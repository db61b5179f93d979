#include "dispatchkit/solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

namespace dispatchkit {

namespace {

void validate_config(const SolverConfig& cfg) {
    if (!(cfg.bisection_tol > 0.0) || !std::isfinite(cfg.bisection_tol)) {
        throw InputError("SolverConfig.bisection_tol must be > 0");
    }
    if (cfg.max_iters < 1) {
        throw InputError("SolverConfig.max_iters must be >= 1");
    }
    if (!(cfg.kkt_tol > 0.0) || !std::isfinite(cfg.kkt_tol)) {
        throw InputError("SolverConfig.kkt_tol must be > 0");
    }
}

std::string infeasibility_message(const RegimeReport& report) {
    if (report.regime == Regime::Deficit) {
        return "infeasible: fleet capacity T*sum(p_max) = " +
               std::to_string(report.capacity_max_kwh) + " kWh < demand " +
               std::to_string(report.demand_e_kwh) +
               " kWh; no allocation can clear the market";
    }
    return "infeasible: demand " + std::to_string(report.demand_e_kwh) +
           " kWh < mandatory minimum T*sum(p_min) = " +
           std::to_string(report.capacity_min_kwh) +
           " kWh; every customer must run at p_min or above";
}

/// Bisection on a monotone residual until |f(x)| <= tol. The analytic
/// brackets used below always straddle zero; if a caller-supplied pair does
/// not, the bracket is widened x2 up to 8 times before failing loudly.
double bisect(const std::function<double(double)>& residual, double lo,
              double hi, const SolverConfig& cfg, const std::string& what) {
    double f_lo = residual(lo);
    if (std::abs(f_lo) <= cfg.bisection_tol) return lo;
    double f_hi = residual(hi);
    if (std::abs(f_hi) <= cfg.bisection_tol) return hi;

    int expansions = 0;
    while (f_lo * f_hi > 0.0) {
        if (expansions == 8) {
            throw NumericalError(what + ": residual does not change sign in [" +
                                 std::to_string(lo) + ", " + std::to_string(hi) +
                                 "] after 8 bracket expansions");
        }
        const double width = hi - lo;
        lo -= width;
        hi += width;
        f_lo = residual(lo);
        if (std::abs(f_lo) <= cfg.bisection_tol) return lo;
        f_hi = residual(hi);
        if (std::abs(f_hi) <= cfg.bisection_tol) return hi;
        ++expansions;
    }

    for (int iter = 0; iter < cfg.max_iters; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = residual(mid);
        if (std::abs(f_mid) <= cfg.bisection_tol) return mid;
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    throw NumericalError(what + ": no convergence to " +
                         std::to_string(cfg.bisection_tol) + " kWh within " +
                         std::to_string(cfg.max_iters) + " iterations");
}

/// Box status of the unclamped stationary point. A stationary point
/// exactly on a bound reports the bound, never Interior.
BoundStatus classify_bound(double stationary_kwh, double lo_kwh, double hi_kwh) {
    if (stationary_kwh <= lo_kwh) return BoundStatus::AtLower;
    if (stationary_kwh >= hi_kwh) return BoundStatus::AtUpper;
    return BoundStatus::Interior;
}

/// Stationarity violation for minimizing a separable objective with
/// per-customer gradient g at the solution: an interior point needs g = 0,
/// a lower bound needs g >= 0, an upper bound needs g <= 0.
double stationarity_violation(double gradient, BoundStatus status) {
    switch (status) {
        case BoundStatus::Interior: return std::abs(gradient);
        case BoundStatus::AtLower: return std::max(0.0, -gradient);
        case BoundStatus::AtUpper: return std::max(0.0, gradient);
    }
    return std::numeric_limits<double>::quiet_NaN();
}

void fill_totals(const DispatchProblem& problem, DispatchSolution& sol) {
    sol.total_energy_kwh = 0.0;
    sol.total_cost = 0.0;
    for (std::size_t i = 0; i < problem.size(); ++i) {
        sol.total_energy_kwh += sol.energies_kwh[i];
        sol.total_cost +=
            evaluate_cost(problem.customers[i], sol.energies_kwh[i], problem.horizon_t);
    }
}

/// Energies, statuses and KKT residual of the fleet's response to an
/// equal-marginal-cost price. Used by the equality dispatch, where the
/// per-customer gradient is marginal_cost - price.
DispatchSolution price_response_solution(const DispatchProblem& problem,
                                         double price) {
    const double t = problem.horizon_t;
    DispatchSolution sol;
    sol.energies_kwh.reserve(problem.size());
    sol.bound_status.reserve(problem.size());
    sol.coupling_multiplier = price;
    sol.kkt_residual = 0.0;
    for (const auto& pc : problem.customers) {
        const double lo = t * pc.p_min_kw;
        const double hi = t * pc.p_max_kw;
        const double stationary = t * (price - pc.c1) / (2.0 * pc.c2);
        const double e = std::clamp(stationary, lo, hi);
        const BoundStatus status = classify_bound(stationary, lo, hi);
        sol.energies_kwh.push_back(e);
        sol.bound_status.push_back(status);
        const double g = marginal_cost(pc, e, t) - price;
        sol.kkt_residual = std::max(sol.kkt_residual, stationarity_violation(g, status));
    }
    fill_totals(problem, sol);
    return sol;
}

}  // namespace

DispatchSolution solve_cost_dispatch(const DispatchProblem& problem,
                                     const SolverConfig& cfg) {
    validate_config(cfg);
    const RegimeReport report = classify_regime(problem);
    if (report.regime != Regime::EqualityFeasible) {
        throw InfeasibleError("cost dispatch: " + infeasibility_message(report));
    }

    const double t = problem.horizon_t;
    double price_lo = std::numeric_limits<double>::infinity();
    double price_hi = -std::numeric_limits<double>::infinity();
    for (const auto& pc : problem.customers) {
        price_lo = std::min(price_lo, pc.c1);
        price_hi = std::max(price_hi, marginal_cost(pc, t * pc.p_max_kw, t));
    }

    const auto residual = [&](double price) {
        double sum = 0.0;
        for (const auto& pc : problem.customers) {
            sum += inverse_marginal_cost(pc, price, t);
        }
        return sum - problem.demand_e;
    };

    const double price =
        bisect(residual, price_lo, price_hi, cfg, "cost dispatch price search");
    return price_response_solution(problem, price);
}

DispatchSolution solve_resilience_dispatch(const DispatchProblem& problem,
                                           const SolverConfig& cfg) {
    validate_config(cfg);
    const RegimeReport report = classify_regime(problem);
    if (report.regime == Regime::BelowMinimum) {
        throw InfeasibleError("resilience dispatch: " + infeasibility_message(report));
    }

    if (report.regime == Regime::Deficit) {
        // Unique optimum: every customer flat out. The coupling constraint
        // is slack, so its multiplier is zero, and -1 + 0 <= 0 holds at
        // every upper bound: stationarity is exact.
        const double t = problem.horizon_t;
        DispatchSolution sol;
        for (const auto& pc : problem.customers) {
            sol.energies_kwh.push_back(t * pc.p_max_kw);
            sol.bound_status.push_back(BoundStatus::AtUpper);
        }
        sol.coupling_multiplier = 0.0;
        sol.kkt_residual = 0.0;
        fill_totals(problem, sol);
        return sol;
    }

    // Multiple maximizers exist once any customer has slack; the
    // representative handed back is the cheapest energy-maximal point,
    // i.e. the least-cost dispatch pinned to the full achievable energy.
    const double target = std::min(problem.demand_e, report.capacity_max_kwh);
    return solve_cost_dispatch(problem.with_demand(target), cfg);
}

DispatchSolution solve_multiobjective(const DispatchProblem& problem,
                                      const SolverConfig& cfg) {
    validate_config(cfg);
    const double lambda = problem.lambda;
    if (!std::isfinite(lambda) || lambda < 0.0 || lambda > 1.0) {
        throw InputError("solve_multiobjective: lambda must lie in [0, 1], got " +
                         std::to_string(lambda));
    }

    const RegimeReport report = classify_regime(problem);
    if (report.regime == Regime::BelowMinimum) {
        throw InfeasibleError("multiobjective dispatch: " + infeasibility_message(report));
    }

    // The scalarized objective at lambda = 0 is exactly the resilience
    // objective, and the closed form below divides by lambda.
    if (lambda == 0.0) {
        return solve_resilience_dispatch(problem, cfg);
    }

    const double t = problem.horizon_t;

    // Customer response to the coupling multiplier mu: stationarity of
    // lambda*C_i(e) - (1-lambda)*e + mu*e gives the effective price
    // (1 - lambda - mu) / lambda fed through inverse_marginal_cost.
    const auto response_sum = [&](double mu) {
        const double price = (1.0 - lambda - mu) / lambda;
        double sum = 0.0;
        for (const auto& pc : problem.customers) {
            sum += inverse_marginal_cost(pc, price, t);
        }
        return sum;
    };

    double mu = 0.0;
    if (response_sum(0.0) > problem.demand_e) {
        // Coupling active: drive sum e_i(mu) onto the demand. mu = 0
        // overshoots; mu = 1 prices everyone to p_min, which undershoots
        // in any feasible regime. Bisection on [0, 1] always brackets.
        const auto residual = [&](double m) {
            return response_sum(m) - problem.demand_e;
        };
        mu = bisect(residual, 0.0, 1.0, cfg, "multiobjective coupling search");
    }

    const double price = (1.0 - lambda - mu) / lambda;
    DispatchSolution sol;
    sol.energies_kwh.reserve(problem.size());
    sol.bound_status.reserve(problem.size());
    sol.coupling_multiplier = mu;
    sol.kkt_residual = 0.0;
    for (const auto& pc : problem.customers) {
        const double lo = t * pc.p_min_kw;
        const double hi = t * pc.p_max_kw;
        const double stationary = t * (price - pc.c1) / (2.0 * pc.c2);
        const double e = std::clamp(stationary, lo, hi);
        const BoundStatus status = classify_bound(stationary, lo, hi);
        sol.energies_kwh.push_back(e);
        sol.bound_status.push_back(status);
        const double g = lambda * marginal_cost(pc, e, t) - (1.0 - lambda) + mu;
        sol.kkt_residual = std::max(sol.kkt_residual, stationarity_violation(g, status));
    }
    fill_totals(problem, sol);
    return sol;
}

bool verify_pure_cost_minimum(const DispatchProblem& problem,
                              const SolverConfig& cfg) {
    const DispatchSolution sol = solve_multiobjective(problem.with_lambda(1.0), cfg);
    for (std::size_t i = 0; i < problem.size(); ++i) {
        const double floor_kwh = problem.horizon_t * problem.customers[i].p_min_kw;
        if (std::abs(sol.energies_kwh[i] - floor_kwh) > 1e-9) {
            return false;
        }
    }
    return true;
}

}  // namespace dispatchkit
