#include "dispatchkit/core.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>
#include <utility>

namespace dispatchkit {

namespace {

void require_finite(double value, const std::string& field) {
    if (!std::isfinite(value)) {
        throw InputError(field + " must be finite, got " + std::to_string(value));
    }
}

}  // namespace

const char* to_string(BoundStatus status) {
    switch (status) {
        case BoundStatus::AtLower: return "AtLower";
        case BoundStatus::Interior: return "Interior";
        case BoundStatus::AtUpper: return "AtUpper";
    }
    return "?";
}

const char* to_string(Regime regime) {
    switch (regime) {
        case Regime::BelowMinimum: return "BelowMinimum";
        case Regime::EqualityFeasible: return "EqualityFeasible";
        case Regime::Deficit: return "Deficit";
    }
    return "?";
}

ParticipatingCustomer::ParticipatingCustomer(std::string id_, double p_min_kw_,
                                             double p_max_kw_, double c0_,
                                             double c1_, double c2_)
    : id(std::move(id_)),
      p_min_kw(p_min_kw_),
      p_max_kw(p_max_kw_),
      c0(c0_),
      c1(c1_),
      c2(c2_) {
    if (id.empty()) {
        throw InputError("customer id must be non-empty");
    }
    require_finite(p_min_kw, "customer '" + id + "': p_min_kw");
    require_finite(p_max_kw, "customer '" + id + "': p_max_kw");
    require_finite(c0, "customer '" + id + "': c0");
    require_finite(c1, "customer '" + id + "': c1");
    require_finite(c2, "customer '" + id + "': c2");
    if (!(p_min_kw > 0.0)) {
        throw InputError("customer '" + id + "': p_min_kw must be > 0, got " +
                         std::to_string(p_min_kw));
    }
    if (!(p_max_kw > p_min_kw)) {
        throw InputError("customer '" + id + "': p_max_kw must be > p_min_kw (" +
                         std::to_string(p_max_kw) + " <= " + std::to_string(p_min_kw) + ")");
    }
    if (!(c2 > 0.0)) {
        throw InputError("customer '" + id + "': c2 must be > 0, got " +
                         std::to_string(c2));
    }
    if (c1 < 0.0) {
        throw InputError("customer '" + id + "': c1 must be >= 0, got " +
                         std::to_string(c1));
    }
    if (c0 < 0.0) {
        throw InputError("customer '" + id + "': c0 must be >= 0, got " +
                         std::to_string(c0));
    }
}

DispatchProblem::DispatchProblem(std::vector<ParticipatingCustomer> customers_,
                                 double horizon_t_, double demand_e_,
                                 double lambda_)
    : customers(std::move(customers_)),
      horizon_t(horizon_t_),
      demand_e(demand_e_),
      lambda(lambda_) {
    if (customers.empty()) {
        throw InputError("problem needs at least one customer");
    }
    require_finite(horizon_t, "horizon_t");
    require_finite(demand_e, "demand_e");
    require_finite(lambda, "lambda");
    if (!(horizon_t > 0.0)) {
        throw InputError("horizon_t must be > 0 hours, got " + std::to_string(horizon_t));
    }
    if (demand_e < 0.0) {
        throw InputError("demand_e must be >= 0 kWh, got " + std::to_string(demand_e));
    }
    if (lambda < 0.0 || lambda > 1.0) {
        throw InputError("lambda must lie in [0, 1], got " + std::to_string(lambda));
    }
    std::unordered_set<std::string> seen;
    for (const auto& pc : customers) {
        if (!seen.insert(pc.id).second) {
            throw InputError("duplicate customer id '" + pc.id + "'");
        }
    }
}

double DispatchProblem::capacity_min_kwh() const {
    double sum = 0.0;
    for (const auto& pc : customers) sum += pc.p_min_kw;
    return horizon_t * sum;
}

double DispatchProblem::capacity_max_kwh() const {
    double sum = 0.0;
    for (const auto& pc : customers) sum += pc.p_max_kw;
    return horizon_t * sum;
}

DispatchProblem DispatchProblem::with_demand(double demand_e_kwh) const {
    return DispatchProblem(customers, horizon_t, demand_e_kwh, lambda);
}

DispatchProblem DispatchProblem::with_lambda(double lambda_value) const {
    return DispatchProblem(customers, horizon_t, demand_e, lambda_value);
}

double evaluate_cost(const ParticipatingCustomer& pc, double energy_kwh,
                     double horizon_t) {
    if (!std::isfinite(energy_kwh) || energy_kwh < 0.0) {
        throw InputError("evaluate_cost: energy must be finite and >= 0, got " +
                         std::to_string(energy_kwh));
    }
    if (!std::isfinite(horizon_t) || horizon_t <= 0.0) {
        throw InputError("evaluate_cost: horizon must be finite and > 0, got " +
                         std::to_string(horizon_t));
    }
    const double p = energy_kwh / horizon_t;  // average power in kW
    return horizon_t * (pc.c2 * p * p + pc.c1 * p + pc.c0);
}

double marginal_cost(const ParticipatingCustomer& pc, double energy_kwh,
                     double horizon_t) {
    if (!std::isfinite(energy_kwh) || energy_kwh < 0.0) {
        throw InputError("marginal_cost: energy must be finite and >= 0, got " +
                         std::to_string(energy_kwh));
    }
    if (!std::isfinite(horizon_t) || horizon_t <= 0.0) {
        throw InputError("marginal_cost: horizon must be finite and > 0, got " +
                         std::to_string(horizon_t));
    }
    return 2.0 * pc.c2 * (energy_kwh / horizon_t) + pc.c1;
}

double inverse_marginal_cost(const ParticipatingCustomer& pc, double price,
                             double horizon_t) {
    if (!std::isfinite(price)) {
        throw InputError("inverse_marginal_cost: price must be finite");
    }
    if (!std::isfinite(horizon_t) || horizon_t <= 0.0) {
        throw InputError("inverse_marginal_cost: horizon must be finite and > 0, got " +
                         std::to_string(horizon_t));
    }
    const double stationary = horizon_t * (price - pc.c1) / (2.0 * pc.c2);
    return std::clamp(stationary, horizon_t * pc.p_min_kw, horizon_t * pc.p_max_kw);
}

RegimeReport classify_regime(const DispatchProblem& problem) {
    RegimeReport report;
    report.capacity_min_kwh = problem.capacity_min_kwh();
    report.capacity_max_kwh = problem.capacity_max_kwh();
    report.demand_e_kwh = problem.demand_e;
    if (report.capacity_max_kwh < problem.demand_e) {
        report.regime = Regime::Deficit;
    } else if (problem.demand_e < report.capacity_min_kwh) {
        report.regime = Regime::BelowMinimum;
    } else {
        report.regime = Regime::EqualityFeasible;
    }
    return report;
}

}  // namespace dispatchkit
