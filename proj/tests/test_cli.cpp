#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "graphmax/cli_commands.hpp"

using namespace graphmax;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(GRAPHMAX_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) r.output.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("norm command reports the documented example values") {
    RunResult star = run_cli("norm --family star --n 4 --p 1 --kind strong");
    CHECK(star.exit_code == 0);
    CHECK(star.output.find("5/2") != std::string::npos);

    RunResult complete = run_cli("norm --family complete --n 4 --p 1 --kind strong --format json");
    CHECK(complete.exit_code == 0);
    auto j = nlohmann::json::parse(complete.output);
    CHECK(j["value"] == "7/4");
    CHECK(j["kind"] == "exact");
    CHECK(j["schema_version"] == 1);
}

TEST_CASE("norm command accepts an edge file") {
    std::string path = "cli_k2_input.txt";
    std::ofstream(path) << "2 1\n1 2\n";
    RunResult r = run_cli("norm --edges " + path + " --p 2 --kind strong --format json");
    std::remove(path.c_str());
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(std::stod(j["value"].get<std::string>()) == doctest::Approx(1.14412).epsilon(1e-5));
}

TEST_CASE("exit codes follow the contract") {
    CHECK(run_cli("norm --family star --n 1 --p 1").exit_code == cli::kExitBadInput);
    CHECK(run_cli("norm --family star --n 4 --p 0").exit_code == cli::kExitBadInput);
    CHECK(run_cli("norm --family tree --n 4 --p 1").exit_code == cli::kExitBadInput);
    CHECK(run_cli("norm --edges does_not_exist.txt --p 1").exit_code == cli::kExitBadInput);
    CHECK(run_cli("norm --family path --n 12 --p 1 --kind isoclass").exit_code ==
          cli::kExitCapExceeded);
    CHECK(run_cli("indices --family path --n 10").exit_code == cli::kExitCapExceeded);
    CHECK(run_cli("indices --family path --n 10 --skip-overlap").exit_code == 0);
    CHECK(run_cli("verify --n-max 3").exit_code == 0);
}

TEST_CASE("indices command emits witnesses") {
    RunResult r = run_cli("indices --family star --n 6");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["dilation"] == "3");
    CHECK(j["overlapping"] == 5);
    CHECK(j["weak11_upper"] == "3");
    CHECK(j["overlap_witness"].is_array());
    CHECK(j["dilation_witness"]["vertex"].get<int>() >= 1);
}

TEST_CASE("verify prints the seed and one line per check") {
    RunResult r = run_cli("verify --n-max 4 --seed 7");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("seed = 7") != std::string::npos);
    CHECK(r.output.find("PASS n=4 extremal sandwich") != std::string::npos);
    CHECK(r.output.find("PASS n=4 reconstruction") != std::string::npos);
    CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("monotonicity search output is stable across runs") {
    RunResult a = run_cli("search-monotonicity --n-max 4");
    RunResult b = run_cli("search-monotonicity --n-max 4");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("no counterexample") != std::string::npos);
}

TEST_CASE("monotonicity search at n = 5 matches the archived fixture byte for byte") {
    // The archived run found pairs G < G+e whose exact 1-norm *increases*
    // (127/60 -> 13/6), so more edges do not always shrink the norm.
    std::ifstream fixture(std::string(GRAPHMAX_DATA_DIR) + "/monotonicity_n5.txt");
    REQUIRE(fixture.good());
    std::stringstream expect;
    expect << fixture.rdbuf();
    RunResult r = run_cli("search-monotonicity --n-max 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output == expect.str());
    CHECK(r.output.find("counterexample at n=5: masks 937 < 953") != std::string::npos);
}

TEST_CASE("sweep writes well-formed CSV with comparator columns") {
    RunResult r = run_cli("sweep --families complete --n-min 3 --n-max 5 --p 1 --kind strong");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.output);
    std::string line;
    std::getline(lines, line);  // log header with seed
    CHECK(line.find("seed = 0") != std::string::npos);
    std::getline(lines, line);
    CHECK(line ==
          "n,family,p,norm_kind,value_lo,value_hi,comparator_log_n,comparator_power_law,"
          "comparator_weak_limit");
    int rows = 0;
    while (std::getline(lines, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 3);
    CHECK(r.output.find("3,complete,1,strong,5/3,5/3") != std::string::npos);
}

TEST_CASE("sweep to a file and JSON format") {
    std::string path = "cli_sweep_out.json";
    RunResult r = run_cli("sweep --families star --n-min 3 --n-max 4 --p 1 --kind strong "
                          "--format json --out " + path);
    CHECK(r.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    auto j = nlohmann::json::parse(in);
    std::remove(path.c_str());
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    CHECK(j[0]["value_lo"] == "2");   // (3+1)/2
    CHECK(j[1]["value_lo"] == "5/2");
    CHECK(run_cli("sweep --families star --n-min 3 --n-max 4 --p 1 --out /nope/x.csv").exit_code ==
          cli::kExitIo);
}

TEST_CASE("GM_THREADS controls the worker count") {
    std::string cmd = "GM_THREADS=3 " + std::string(GRAPHMAX_CLI_PATH) + " verify --n-max 2 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    pclose(pipe);
    CHECK(out.find("threads = 3") != std::string::npos);
}
