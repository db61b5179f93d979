#pragma once

// Domain types and the quadratic generator cost model.
//
// Units are fixed throughout the library: power in kW, energy in kWh,
// durations in hours. Costs carry no currency and are labelled
// "cost-units" everywhere they surface.

#include <cstddef>
#include <string>
#include <vector>

#include "dispatchkit/errors.hpp"

namespace dispatchkit {

enum class BoundStatus { AtLower, Interior, AtUpper };

enum class Regime { BelowMinimum, EqualityFeasible, Deficit };

const char* to_string(BoundStatus status);
const char* to_string(Regime regime);

/// One contracted generator. The cost of producing e kWh over t hours is
///
///     C(e, t) = t * [ c2 * (e/t)^2 + c1 * (e/t) + c0 ]
///
/// with c2 > 0 (strict convexity) and c1 >= 0 (marginal cost stays
/// nonnegative and increasing on the whole feasible range).
struct ParticipatingCustomer {
    std::string id;
    double p_min_kw;  ///< minimum average power while enrolled, > 0
    double p_max_kw;  ///< maximum average power, > p_min_kw
    double c0;        ///< fixed cost, cost-units per hour
    double c1;        ///< linear coefficient, cost-units per kWh
    double c2;        ///< quadratic coefficient, cost-units * h / kWh^2

    ParticipatingCustomer(std::string id, double p_min_kw, double p_max_kw,
                          double c0, double c1, double c2);
};

/// A fleet of customers plus the program parameters: duration T, shortage
/// demand e-bar, and the cost-vs-resilience weight lambda.
struct DispatchProblem {
    std::vector<ParticipatingCustomer> customers;
    double horizon_t;  ///< program duration T in hours, > 0
    double demand_e;   ///< shortage energy in kWh, >= 0
    double lambda;     ///< scalarization weight in [0, 1]; 1 = pure cost

    DispatchProblem(std::vector<ParticipatingCustomer> customers,
                    double horizon_t, double demand_e, double lambda = 0.5);

    std::size_t size() const { return customers.size(); }

    /// T * sum(p_min), the least energy the fleet can be dispatched for.
    double capacity_min_kwh() const;
    /// T * sum(p_max), the most energy the fleet can produce.
    double capacity_max_kwh() const;

    DispatchProblem with_demand(double demand_e_kwh) const;
    DispatchProblem with_lambda(double lambda_value) const;
};

/// Per-customer energies plus the dual/KKT diagnostics of a solve.
struct DispatchSolution {
    std::vector<double> energies_kwh;        ///< same order as the problem
    double total_energy_kwh = 0.0;
    double total_cost = 0.0;
    /// Shadow price of the market-clearing constraint, cost-units/kWh.
    /// Zero when the coupling constraint is slack; NaN for oracle output,
    /// which carries no dual certificate.
    double coupling_multiplier = 0.0;
    std::vector<BoundStatus> bound_status;
    /// Max stationarity violation over all customers, cost-units/kWh.
    /// NaN for oracle output.
    double kkt_residual = 0.0;
};

/// Feasibility classification of the equality-constrained dispatch.
///
///   Deficit          capacity_max <  demand: no allocation can clear
///   EqualityFeasible capacity_min <= demand <= capacity_max
///   BelowMinimum     demand < capacity_min: mandatory minimums overshoot
struct RegimeReport {
    Regime regime;
    double capacity_max_kwh;
    double capacity_min_kwh;
    double demand_e_kwh;
};

/// One sample of the cost/energy trade-off curve. A run of consecutive
/// lambda samples with identical outcomes is collapsed into one point;
/// [lambda, lambda_hi] is the collapsed interval (lambda == lambda_hi for
/// a singleton).
struct ParetoPoint {
    double lambda;
    double lambda_hi;
    double total_cost;
    double total_energy_kwh;
    std::vector<double> energies_kwh;
};

/// Cost of producing `energy_kwh` over `horizon_t` hours.
double evaluate_cost(const ParticipatingCustomer& pc, double energy_kwh,
                     double horizon_t);

/// d(cost)/d(energy) = 2*c2*(e/t) + c1, strictly increasing in e.
double marginal_cost(const ParticipatingCustomer& pc, double energy_kwh,
                     double horizon_t);

/// Energy at which the marginal cost equals `price`, clamped to the box
/// [t*p_min, t*p_max].
double inverse_marginal_cost(const ParticipatingCustomer& pc, double price,
                             double horizon_t);

RegimeReport classify_regime(const DispatchProblem& problem);

}  // namespace dispatchkit
