#include "dispatchkit/problem_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dispatchkit {

namespace {

using nlohmann::json;

double require_number(const json& obj, const std::string& key,
                      const std::string& path) {
    if (!obj.contains(key)) {
        throw InputError(path + ": missing required field '" + key + "'");
    }
    const json& value = obj.at(key);
    if (!value.is_number()) {
        throw InputError(path + "." + key + ": expected a number, got " +
                         std::string(value.type_name()));
    }
    return value.get<double>();
}

void reject_unknown(const json& obj, std::initializer_list<const char*> known,
                    const std::string& path) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* k : known) {
            if (key == k) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            throw InputError(path + ": unknown field '" + key + "'");
        }
    }
}

}  // namespace

DispatchProblem parse_problem(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& err) {
        throw InputError(std::string("problem file: ") + err.what());
    }
    if (!doc.is_object()) {
        throw InputError("problem file: top level must be an object");
    }
    reject_unknown(doc, {"horizon_t", "demand_e", "lambda", "customers"}, "problem");

    const double horizon_t = require_number(doc, "horizon_t", "problem");
    const double demand_e = require_number(doc, "demand_e", "problem");
    double lambda = 0.5;
    if (doc.contains("lambda")) {
        lambda = require_number(doc, "lambda", "problem");
    }

    if (!doc.contains("customers")) {
        throw InputError("problem: missing required field 'customers'");
    }
    const json& customers_json = doc.at("customers");
    if (!customers_json.is_array() || customers_json.empty()) {
        throw InputError("problem.customers: expected a non-empty array");
    }

    std::vector<ParticipatingCustomer> customers;
    customers.reserve(customers_json.size());
    for (std::size_t i = 0; i < customers_json.size(); ++i) {
        const json& c = customers_json.at(i);
        const std::string path = "problem.customers[" + std::to_string(i) + "]";
        if (!c.is_object()) {
            throw InputError(path + ": expected an object");
        }
        reject_unknown(c, {"id", "p_min_kw", "p_max_kw", "c0", "c1", "c2"}, path);
        if (!c.contains("id") || !c.at("id").is_string()) {
            throw InputError(path + ".id: expected a string");
        }
        try {
            customers.emplace_back(c.at("id").get<std::string>(),
                                   require_number(c, "p_min_kw", path),
                                   require_number(c, "p_max_kw", path),
                                   require_number(c, "c0", path),
                                   require_number(c, "c1", path),
                                   require_number(c, "c2", path));
        } catch (const InputError& err) {
            throw InputError(path + ": " + err.what());
        }
    }

    try {
        return DispatchProblem(std::move(customers), horizon_t, demand_e, lambda);
    } catch (const InputError& err) {
        throw InputError(std::string("problem: ") + err.what());
    }
}

std::string serialize_problem(const DispatchProblem& problem) {
    json doc;
    doc["horizon_t"] = problem.horizon_t;
    doc["demand_e"] = problem.demand_e;
    doc["lambda"] = problem.lambda;
    json customers = json::array();
    for (const auto& pc : problem.customers) {
        customers.push_back({{"id", pc.id},
                             {"p_min_kw", pc.p_min_kw},
                             {"p_max_kw", pc.p_max_kw},
                             {"c0", pc.c0},
                             {"c1", pc.c1},
                             {"c2", pc.c2}});
    }
    doc["customers"] = std::move(customers);
    return doc.dump(2) + "\n";
}

DispatchProblem load_problem(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open problem file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_problem(buffer.str());
    } catch (const InputError& err) {
        throw InputError(path.string() + ": " + err.what());
    }
}

void save_problem(const DispatchProblem& problem, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot write problem file '" + path.string() + "'");
    }
    out << serialize_problem(problem);
}

}  // namespace dispatchkit
