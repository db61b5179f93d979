#include "dispatchkit/table.hpp"

#include <cstdio>
#include <fstream>
#include <system_error>

namespace dispatchkit {

namespace {

std::string fmt6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

void append_solution_cells(std::string& out, const DispatchSolution& sol) {
    for (const double e : sol.energies_kwh) {
        out += fmt6(e);
        out += ',';
    }
    out += fmt6(sol.total_energy_kwh);
    out += ',';
    out += fmt6(sol.total_cost);
    out += ',';
    out += fmt6(sol.coupling_multiplier);
    out += '\n';
}

std::string header(const std::string& parameter_name,
                   const std::vector<std::string>& customer_ids) {
    std::string line;
    if (!parameter_name.empty()) {
        line += parameter_name;
        line += ',';
    }
    for (const auto& id : customer_ids) {
        line += id;
        line += ',';
    }
    line += "total_energy_kwh,total_cost,coupling_multiplier\n";
    return line;
}

}  // namespace

std::string render_solution_table(const std::vector<std::string>& customer_ids,
                                  const DispatchSolution& solution) {
    std::string out = header("", customer_ids);
    append_solution_cells(out, solution);
    return out;
}

std::string render_sweep_table(const std::string& parameter_name,
                               const std::vector<std::string>& customer_ids,
                               const SweepResult& result) {
    std::string out = header(parameter_name, customer_ids);
    for (const auto& row : result.rows) {
        out += fmt6(row.parameter);
        out += ',';
        append_solution_cells(out, row.solution);
    }
    return out;
}

std::string render_pareto_table(const std::vector<ParetoPoint>& frontier) {
    std::string out = "lambda_lo,lambda_hi,total_cost,total_energy_kwh\n";
    for (const auto& point : frontier) {
        out += fmt6(point.lambda);
        out += ',';
        out += fmt6(point.lambda_hi);
        out += ',';
        out += fmt6(point.total_cost);
        out += ',';
        out += fmt6(point.total_energy_kwh);
        out += '\n';
    }
    return out;
}

void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw InputError("cannot write '" + tmp.string() + "'");
        }
        out << content;
        out.flush();
        if (!out) {
            throw InputError("write failed for '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw InputError("cannot move '" + tmp.string() + "' to '" + path.string() +
                         "': " + ec.message());
    }
}

}  // namespace dispatchkit
