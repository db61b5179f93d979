#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "dispatchkit/problem_io.hpp"
#include "fixtures.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr interleaved
};

/// Run the CLI through the shell, capturing combined output. `env_prefix`
/// is prepended verbatim, e.g. "DISPATCHKIT_TOL=1e-6 ".
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string command =
        env_prefix + "'" + DISPATCHKIT_CLI_PATH + "' " + args + " 2>&1";
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    while (std::fgets(buffer, sizeof(buffer), pipe) != nullptr) {
        result.output += buffer;
    }
    const int status = pclose(pipe);
    REQUIRE(status != -1);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "dispatchkit_test_cli";
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(static_cast<bool>(in));
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::size_t count_lines(const std::string& text) {
    std::size_t count = 0;
    for (const char ch : text) {
        if (ch == '\n') ++count;
    }
    return count;
}

std::string fleet5_path() {
    return (fs::path(DISPATCHKIT_DATA_DIR) / "fleet5.json").string();
}

/// fleet5 with a different demand, written into the scratch dir.
std::string fleet5_file_with_demand(const fs::path& dir, double demand,
                                    const std::string& name) {
    const fs::path path = dir / name;
    dispatchkit::save_problem(fixtures::fleet5_problem(demand), path);
    return path.string();
}

}  // namespace

TEST_CASE("check classifies all three regimes with distinct exit codes") {
    const fs::path dir = scratch_dir();

    const auto deficit = run_cli("check " + fleet5_path());
    CHECK(deficit.exit_code == 2);
    CHECK(deficit.output.find("regime: Deficit") != std::string::npos);
    CHECK(deficit.output.find("capacity_min_kwh: 150.000000") !=
          std::string::npos);
    CHECK(deficit.output.find("capacity_max_kwh: 500.000000") !=
          std::string::npos);
    CHECK(deficit.output.find("demand_e_kwh: 700.000000") != std::string::npos);

    const auto feasible =
        run_cli("check " + fleet5_file_with_demand(dir, 300.0, "d300.json"));
    CHECK(feasible.exit_code == 0);
    CHECK(feasible.output.find("regime: EqualityFeasible") !=
          std::string::npos);

    const auto below =
        run_cli("check " + fleet5_file_with_demand(dir, 100.0, "d100.json"));
    CHECK(below.exit_code == 4);
    CHECK(below.output.find("regime: BelowMinimum") != std::string::npos);

    // Exact capacity boundaries belong to the equality-feasible band on the
    // high side and to BelowMinimum only strictly below the floor.
    const auto at_ceiling =
        run_cli("check " + fleet5_file_with_demand(dir, 500.0, "d500.json"));
    CHECK(at_ceiling.exit_code == 0);
    CHECK(at_ceiling.output.find("regime: EqualityFeasible") !=
          std::string::npos);

    const auto zero =
        run_cli("check " + fleet5_file_with_demand(dir, 0.0, "d0.json"));
    CHECK(zero.exit_code == 4);
    CHECK(zero.output.find("regime: BelowMinimum") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("solve --mode cost reproduces the frozen 300 kWh dispatch") {
    const fs::path dir = scratch_dir();
    const std::string problem = fleet5_file_with_demand(dir, 300.0, "d300.json");
    const auto run = run_cli("solve --mode cost " + problem);
    CHECK(run.exit_code == 0);
    CHECK(run.output.find("PC1,PC2,PC3,PC4,PC5,total_energy_kwh,total_cost,"
                          "coupling_multiplier\n") != std::string::npos);
    CHECK(run.output.find("60.000000,63.692250,62.727599,55.206551,58.373599,"
                          "300.000000,3520.917428,12.861118\n") !=
          std::string::npos);
    CHECK(run.output.find("bound_status: PC1=AtUpper PC2=Interior "
                          "PC3=Interior PC4=Interior PC5=Interior") !=
          std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("solve modes cover the bundled deficit problem") {
    const auto resilience =
        run_cli("solve --mode resilience " + fleet5_path());
    CHECK(resilience.exit_code == 0);
    CHECK(resilience.output.find("60.000000,100.000000,125.000000,85.000000,"
                                 "130.000000,500.000000,") !=
          std::string::npos);
    CHECK(resilience.output.find("PC5=AtUpper") != std::string::npos);

    const auto pure_cost =
        run_cli("solve --mode multi --lambda 1 " + fleet5_path());
    CHECK(pure_cost.exit_code == 0);
    CHECK(pure_cost.output.find("30.000000,30.000000,30.000000,30.000000,"
                                "30.000000,150.000000,") != std::string::npos);
    CHECK(pure_cost.output.find("PC1=AtLower") != std::string::npos);

    // The equality dispatch has no feasible point in deficit.
    const auto cost = run_cli("solve --mode cost " + fleet5_path());
    CHECK(cost.exit_code == 2);
    CHECK(cost.output.find("error:") != std::string::npos);
}

TEST_CASE("solve --out writes the same table it prints") {
    const fs::path dir = scratch_dir();
    const std::string problem = fleet5_file_with_demand(dir, 300.0, "d300.json");
    const fs::path out = dir / "solution.csv";
    const auto run =
        run_cli("solve --mode cost --out " + out.string() + " " + problem);
    CHECK(run.exit_code == 0);
    REQUIRE(fs::exists(out));
    const std::string table = slurp(out);
    CHECK(count_lines(table) == 2);
    CHECK(run.output.rfind(table, 0) == 0);  // stdout starts with the table
    fs::remove_all(dir);
}

TEST_CASE("infeasible and malformed inputs map to exit codes 2 and 1") {
    const fs::path dir = scratch_dir();

    const std::string below = fleet5_file_with_demand(dir, 100.0, "d100.json");
    CHECK(run_cli("solve --mode multi " + below).exit_code == 2);
    CHECK(run_cli("solve --mode resilience " + below).exit_code == 2);

    CHECK(run_cli("check " + (dir / "missing.json").string()).exit_code == 1);

    const fs::path broken = dir / "broken.json";
    std::ofstream(broken) << "{ not json";
    const auto parse = run_cli("check " + broken.string());
    CHECK(parse.exit_code == 1);
    CHECK(parse.output.find("error:") != std::string::npos);

    CHECK(run_cli("solve --mode warp " + fleet5_path()).exit_code == 1);
    CHECK(run_cli("solve --no-such-flag " + fleet5_path()).exit_code == 1);
    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("conjure").exit_code == 1);
    CHECK(run_cli("--help").exit_code == 0);

    // sweep requires --start/--stop/--step/--out.
    CHECK(run_cli("sweep " + fleet5_path()).exit_code == 1);
    fs::remove_all(dir);
}

TEST_CASE("DISPATCHKIT_TOL is honoured and validated") {
    const fs::path dir = scratch_dir();
    const std::string problem = fleet5_file_with_demand(dir, 300.0, "d300.json");

    CHECK(run_cli("solve --mode cost " + problem, "DISPATCHKIT_TOL=1e-6 ")
              .exit_code == 0);

    const auto bad_text =
        run_cli("solve --mode cost " + problem, "DISPATCHKIT_TOL=abc ");
    CHECK(bad_text.exit_code == 1);
    CHECK(bad_text.output.find("DISPATCHKIT_TOL") != std::string::npos);

    CHECK(run_cli("solve --mode cost " + problem, "DISPATCHKIT_TOL=-1 ")
              .exit_code == 1);
    CHECK(run_cli("solve --mode cost " + problem, "DISPATCHKIT_TOL=0 ")
              .exit_code == 1);
    fs::remove_all(dir);
}

TEST_CASE("demand sweep writes 36 rows and names its breakpoints") {
    const fs::path dir = scratch_dir();
    const std::string problem = fleet5_file_with_demand(dir, 300.0, "d300.json");
    const fs::path out = dir / "demand.csv";
    const auto run = run_cli("sweep --param demand --start 150 --stop 500 "
                             "--step 10 --out " +
                             out.string() + " " + problem);
    CHECK(run.exit_code == 0);
    CHECK(run.output.find("wrote 36 rows to") != std::string::npos);
    CHECK(run.output.find("breakpoints: 160.000000 290.000000 440.000000 "
                          "490.000000 500.000000") != std::string::npos);

    const std::string table = slurp(out);
    CHECK(count_lines(table) == 37);
    CHECK(table.rfind("demand_e,PC1,", 0) == 0);
    CHECK(table.find("\n150.000000,30.000000,30.000000,30.000000,30.000000,"
                     "30.000000,150.000000,") != std::string::npos);
    CHECK(table.find("\n500.000000,60.000000,100.000000,125.000000,"
                     "85.000000,130.000000,500.000000,") != std::string::npos);

    // Identical invocations produce byte-identical files.
    const fs::path out2 = dir / "demand2.csv";
    run_cli("sweep --param demand --start 150 --stop 500 --step 10 --out " +
            out2.string() + " " + problem);
    CHECK(slurp(out2) == table);
    fs::remove_all(dir);
}

TEST_CASE("lambda sweep emits the saturation plateaus and an SVG") {
    const fs::path dir = scratch_dir();
    const fs::path out = dir / "lambda.csv";
    const fs::path plot = dir / "lambda.svg";
    const auto run = run_cli("sweep --param lambda --start 0 --stop 1 "
                             "--step 0.01 --out " +
                             out.string() + " --plot " + plot.string() + " " +
                             fleet5_path());
    CHECK(run.exit_code == 0);
    CHECK(run.output.find("wrote 101 rows to") != std::string::npos);
    CHECK(run.output.find("breakpoints:") != std::string::npos);
    CHECK(run.output.find("wrote plot to") != std::string::npos);

    const std::string table = slurp(out);
    CHECK(count_lines(table) == 102);
    CHECK(table.rfind("lambda,PC1,", 0) == 0);
    // Saturated at the ceiling while lambda is small ...
    CHECK(table.find("\n0.000000,60.000000,100.000000,125.000000,85.000000,"
                     "130.000000,500.000000,") != std::string::npos);
    CHECK(table.find("\n0.040000,60.000000,100.000000,125.000000,85.000000,"
                     "130.000000,500.000000,") != std::string::npos);
    // ... floored from 0.10 on, but not yet at 0.09.
    CHECK(table.find("\n0.100000,30.000000,30.000000,30.000000,30.000000,"
                     "30.000000,150.000000,") != std::string::npos);
    CHECK(table.find("\n1.000000,30.000000,30.000000,30.000000,30.000000,"
                     "30.000000,150.000000,") != std::string::npos);
    CHECK(table.find("\n0.090000,30.000000") == std::string::npos);

    const std::string svg = slurp(plot);
    CHECK(svg.rfind("<svg xmlns=", 0) == 0);
    std::size_t polylines = 0;
    for (std::size_t pos = svg.find("<polyline class=\"series\"");
         pos != std::string::npos;
         pos = svg.find("<polyline class=\"series\"", pos + 1)) {
        ++polylines;
    }
    CHECK(polylines == 5);
    fs::remove_all(dir);
}

TEST_CASE("sweep refuses out-of-band demand points without writing") {
    const fs::path dir = scratch_dir();
    const std::string problem = fleet5_file_with_demand(dir, 300.0, "d300.json");
    const fs::path out = dir / "never.csv";
    const auto run = run_cli("sweep --param demand --start 140 --stop 200 "
                             "--step 10 --out " +
                             out.string() + " " + problem);
    CHECK(run.exit_code == 2);
    CHECK(run.output.find("140.000000") != std::string::npos);
    CHECK(!fs::exists(out));
    fs::remove_all(dir);
}

TEST_CASE("pareto traces the deficit frontier deterministically") {
    const fs::path dir = scratch_dir();
    const fs::path out = dir / "pareto.csv";
    const fs::path plot = dir / "pareto.svg";
    const auto run = run_cli("pareto --grid-size 101 --out " + out.string() +
                             " --plot " + plot.string() + " " + fleet5_path());
    CHECK(run.exit_code == 0);
    CHECK(run.output.find("wrote 7 frontier points to") != std::string::npos);

    const std::string table = slurp(out);
    CHECK(count_lines(table) == 8);
    CHECK(table.rfind("lambda_lo,lambda_hi,total_cost,total_energy_kwh\n",
                      0) == 0);
    CHECK(table.find("\n0.000000,0.040000,") != std::string::npos);
    CHECK(table.find("\n0.100000,1.000000,") != std::string::npos);
    CHECK(table.find(",500.000000\n") != std::string::npos);
    CHECK(table.find(",150.000000\n") != std::string::npos);

    const std::string svg = slurp(plot);
    CHECK(svg.find("<polyline class=\"series\"") != std::string::npos);
    CHECK(svg.find("Cost vs delivered energy") != std::string::npos);

    const fs::path out2 = dir / "pareto2.csv";
    run_cli("pareto --grid-size 101 --out " + out2.string() + " " +
            fleet5_path());
    CHECK(slurp(out2) == table);

    CHECK(run_cli("pareto --grid-size 1 --out " + out.string() + " " +
                  fleet5_path())
              .exit_code == 1);
    fs::remove_all(dir);
}
