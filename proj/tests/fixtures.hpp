#pragma once

// Shared test fixtures: the bundled five-customer fleet and random fleet
// generators used by the property tests.

#include <random>
#include <vector>

#include "dispatchkit/core.hpp"

namespace fixtures {

/// The bundled five-customer fleet (same numbers as data/fleet5.json).
inline std::vector<dispatchkit::ParticipatingCustomer> fleet5() {
    using dispatchkit::ParticipatingCustomer;
    return {
        ParticipatingCustomer("PC1", 30.0, 60.0, 96.6, 7.588, 0.0414),
        ParticipatingCustomer("PC2", 30.0, 100.0, 96.6046, 7.5874, 0.0414),
        ParticipatingCustomer("PC3", 30.0, 125.0, 96.279, 7.592, 0.042),
        ParticipatingCustomer("PC4", 30.0, 85.0, 100.3937, 6.9761, 0.0533),
        ParticipatingCustomer("PC5", 30.0, 130.0, 95.856, 7.374, 0.047),
    };
}

inline dispatchkit::DispatchProblem fleet5_problem(double demand_e,
                                                   double lambda = 0.5,
                                                   double horizon_t = 1.0) {
    return dispatchkit::DispatchProblem(fleet5(), horizon_t, demand_e, lambda);
}

/// Random fleet with the parameter ranges used by the randomized checks:
/// p_min in [10, 50], p_max in [p_min + 20, 200], c1 in [1, 10],
/// c2 in [0.01, 0.1].
inline std::vector<dispatchkit::ParticipatingCustomer> random_fleet(
    std::mt19937& rng, std::size_t n) {
    std::uniform_real_distribution<double> p_min_dist(10.0, 50.0);
    std::uniform_real_distribution<double> c0_dist(0.0, 100.0);
    std::uniform_real_distribution<double> c1_dist(1.0, 10.0);
    std::uniform_real_distribution<double> c2_dist(0.01, 0.1);
    std::vector<dispatchkit::ParticipatingCustomer> fleet;
    fleet.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double p_min = p_min_dist(rng);
        std::uniform_real_distribution<double> p_max_dist(p_min + 20.0, 200.0);
        fleet.emplace_back("G" + std::to_string(i + 1), p_min, p_max_dist(rng),
                           c0_dist(rng), c1_dist(rng), c2_dist(rng));
    }
    return fleet;
}

/// Demand strictly inside the equality-feasible band.
inline double interior_demand(std::mt19937& rng,
                              const dispatchkit::DispatchProblem& problem,
                              double margin = 0.1) {
    std::uniform_real_distribution<double> u(margin, 1.0 - margin);
    const double lo = problem.capacity_min_kwh();
    const double hi = problem.capacity_max_kwh();
    return lo + u(rng) * (hi - lo);
}

}  // namespace fixtures
