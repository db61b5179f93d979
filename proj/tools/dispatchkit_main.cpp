// dispatchkit CLI: feasibility checks, single dispatch solves, parameter
// sweeps and Pareto-frontier extraction over a problem file.
//
// Exit codes: 0 success, 1 bad input or parse error, 2 infeasible problem,
// 3 numerical failure. `check` additionally uses 2 for a capacity deficit
// and 4 for demand below the fleet's mandatory minimum.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dispatchkit/analysis.hpp"
#include "dispatchkit/core.hpp"
#include "dispatchkit/oracle.hpp"
#include "dispatchkit/problem_io.hpp"
#include "dispatchkit/solver.hpp"
#include "dispatchkit/svg_plot.hpp"
#include "dispatchkit/table.hpp"

namespace {

using namespace dispatchkit;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitBelowMinimum = 4;

std::string fmt6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

SolverConfig config_from_env() {
    SolverConfig cfg;
    if (const char* tol = std::getenv("DISPATCHKIT_TOL")) {
        char* end = nullptr;
        const double parsed = std::strtod(tol, &end);
        if (end == tol || *end != '\0' || !(parsed > 0.0)) {
            throw InputError("DISPATCHKIT_TOL must be a positive number, got '" +
                             std::string(tol) + "'");
        }
        cfg.bisection_tol = parsed;
    }
    return cfg;
}

std::vector<std::string> customer_ids(const DispatchProblem& problem) {
    std::vector<std::string> ids;
    ids.reserve(problem.size());
    for (const auto& pc : problem.customers) ids.push_back(pc.id);
    return ids;
}

const char* regime_condition(Regime regime) {
    switch (regime) {
        case Regime::Deficit:
            return "T*sum(p_max) < demand: the fleet cannot clear the shortage; "
                   "the market-clearing equality has no feasible point and only "
                   "the relaxed (<=) dispatch applies";
        case Regime::BelowMinimum:
            return "demand < T*sum(p_min): mandatory minimum generation already "
                   "exceeds the demand; no dispatch satisfies the program";
        case Regime::EqualityFeasible:
            return "T*sum(p_min) <= demand <= T*sum(p_max): the equality dispatch "
                   "is feasible and the least-cost optimum is unique";
    }
    return "";
}

int run_check(const std::string& path) {
    const DispatchProblem problem = load_problem(path);
    const RegimeReport report = classify_regime(problem);
    std::cout << "regime: " << to_string(report.regime) << '\n'
              << "capacity_min_kwh: " << fmt6(report.capacity_min_kwh) << '\n'
              << "capacity_max_kwh: " << fmt6(report.capacity_max_kwh) << '\n'
              << "demand_e_kwh: " << fmt6(report.demand_e_kwh) << '\n'
              << "condition: " << regime_condition(report.regime) << '\n';
    switch (report.regime) {
        case Regime::EqualityFeasible: return kExitOk;
        case Regime::Deficit: return kExitInfeasible;
        case Regime::BelowMinimum: return kExitBelowMinimum;
    }
    return kExitOk;
}

void print_diagnostics(const DispatchProblem& problem, const DispatchSolution& sol) {
    std::cout << "kkt_residual: " << sol.kkt_residual << '\n';
    std::cout << "bound_status:";
    for (std::size_t i = 0; i < problem.size(); ++i) {
        std::cout << ' ' << problem.customers[i].id << '='
                  << to_string(sol.bound_status[i]);
    }
    std::cout << '\n';
}

int run_solve(const std::string& path, const std::string& mode,
              std::optional<double> lambda_override, const std::string& out_path) {
    DispatchProblem problem = load_problem(path);
    if (lambda_override) {
        problem = problem.with_lambda(*lambda_override);
    }
    const SolverConfig cfg = config_from_env();

    DispatchSolution sol;
    if (mode == "cost") {
        sol = solve_cost_dispatch(problem, cfg);
    } else if (mode == "resilience") {
        sol = solve_resilience_dispatch(problem, cfg);
    } else {
        sol = solve_multiobjective(problem, cfg);
    }

    const std::string table = render_solution_table(customer_ids(problem), sol);
    std::cout << table;
    print_diagnostics(problem, sol);
    if (!out_path.empty()) {
        write_file_atomic(out_path, table);
    }
    return kExitOk;
}

int run_sweep(const std::string& path, const std::string& param, double start,
              double stop, double step, const std::string& out_path,
              const std::string& plot_path) {
    const DispatchProblem problem = load_problem(path);
    const SolverConfig cfg = config_from_env();

    SweepSpec spec;
    spec.start = start;
    spec.stop = stop;
    spec.step = step;
    SweepResult result;
    std::string parameter_name;
    if (param == "lambda") {
        spec.parameter = SweepParameter::Lambda;
        parameter_name = "lambda";
        result = sweep_lambda(problem, spec, cfg);
    } else {
        spec.parameter = SweepParameter::Demand;
        parameter_name = "demand_e";
        result = sweep_demand(problem, spec, cfg);
    }

    write_file_atomic(out_path, render_sweep_table(parameter_name,
                                                   customer_ids(problem), result));
    std::cout << "wrote " << result.rows.size() << " rows to " << out_path << '\n';
    if (!result.breakpoints.empty()) {
        std::cout << "breakpoints:";
        for (const double b : result.breakpoints) std::cout << ' ' << fmt6(b);
        std::cout << '\n';
    }

    if (!plot_path.empty()) {
        std::vector<PlotSeries> series(problem.size());
        for (std::size_t i = 0; i < problem.size(); ++i) {
            series[i].label = problem.customers[i].id;
            for (const auto& row : result.rows) {
                series[i].x.push_back(row.parameter);
                series[i].y.push_back(row.solution.energies_kwh[i]);
            }
        }
        const std::string x_label =
            parameter_name == "lambda" ? "lambda" : "demand_e (kWh)";
        write_file_atomic(plot_path,
                          render_line_plot("Dispatch sensitivity (" + parameter_name + ")",
                                           x_label, "energy (kWh)", series,
                                           result.breakpoints));
        std::cout << "wrote plot to " << plot_path << '\n';
    }
    return kExitOk;
}

int run_pareto(const std::string& path, std::size_t grid_size,
               const std::string& out_path, const std::string& plot_path) {
    const DispatchProblem problem = load_problem(path);
    const SolverConfig cfg = config_from_env();

    std::vector<double> grid;
    grid.reserve(grid_size);
    for (std::size_t k = 0; k < grid_size; ++k) {
        grid.push_back(static_cast<double>(k) / static_cast<double>(grid_size - 1));
    }
    const auto frontier = pareto_frontier(problem, grid, cfg);

    write_file_atomic(out_path, render_pareto_table(frontier));
    std::cout << "wrote " << frontier.size() << " frontier points to " << out_path
              << '\n';

    if (!plot_path.empty()) {
        PlotSeries curve;
        curve.label = "frontier";
        for (const auto& point : frontier) {
            curve.x.push_back(point.total_energy_kwh);
            curve.y.push_back(point.total_cost);
        }
        write_file_atomic(plot_path,
                          render_line_plot("Cost vs delivered energy",
                                           "total energy (kWh)",
                                           "total cost (cost-units)", {curve}));
        std::cout << "wrote plot to " << plot_path << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "dispatchkit: optimal energy allocation for supply-shortage programs"};
    app.require_subcommand(1);

    std::string problem_path;
    std::string mode = "multi";
    std::optional<double> lambda_override;
    std::string param = "lambda";
    double start = 0.0;
    double stop = 1.0;
    double step = 0.001;
    std::string out_path;
    std::string plot_path;
    std::size_t grid_size = 101;

    auto* check = app.add_subcommand("check", "classify problem feasibility");
    check->add_option("problem", problem_path, "problem file (JSON)")->required();

    auto* solve = app.add_subcommand("solve", "solve one dispatch problem");
    solve->add_option("problem", problem_path, "problem file (JSON)")->required();
    solve->add_option("--mode", mode, "cost | resilience | multi")
        ->check(CLI::IsMember({"cost", "resilience", "multi"}));
    solve->add_option("--lambda", lambda_override,
                      "override the problem file's lambda");
    solve->add_option("--out", out_path, "also write the result table here");

    auto* sweep = app.add_subcommand("sweep", "sweep lambda or demand");
    sweep->add_option("problem", problem_path, "problem file (JSON)")->required();
    sweep->add_option("--param", param, "lambda | demand")
        ->check(CLI::IsMember({"lambda", "demand"}));
    sweep->add_option("--start", start, "first grid value")->required();
    sweep->add_option("--stop", stop, "last grid value")->required();
    sweep->add_option("--step", step, "grid spacing, > 0")->required();
    sweep->add_option("--out", out_path, "result table path (CSV)")->required();
    sweep->add_option("--plot", plot_path, "optional SVG plot path");

    auto* pareto = app.add_subcommand("pareto", "trace the cost/energy frontier");
    pareto->add_option("problem", problem_path, "problem file (JSON)")->required();
    pareto->add_option("--grid-size", grid_size, "number of lambda samples, >= 2")
        ->check(CLI::Range(std::size_t{2}, std::size_t{1000001}));
    pareto->add_option("--out", out_path, "frontier table path (CSV)")->required();
    pareto->add_option("--plot", plot_path, "optional SVG plot path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (check->parsed()) return run_check(problem_path);
        if (solve->parsed()) return run_solve(problem_path, mode, lambda_override, out_path);
        if (sweep->parsed())
            return run_sweep(problem_path, param, start, stop, step, out_path, plot_path);
        return run_pareto(problem_path, grid_size, out_path, plot_path);
    } catch (const InfeasibleError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitInfeasible;
    } catch (const NumericalError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitNumerical;
    } catch (const InputError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitParse;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitNumerical;
    }
}
