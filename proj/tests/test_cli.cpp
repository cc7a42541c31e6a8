#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "adm");
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = adm::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("adm_cli_" + name);
    std::ofstream(path) << text;
    return path.string();
}

std::string example_file(int id) {
    const Result r = run_cli({"example", std::to_string(id)});
    REQUIRE(r.code == 0);
    return write_temp("example" + std::to_string(id) + ".txt", r.out);
}

} // namespace

TEST_CASE("solve prints components, psi and the maximum error") {
    const Result r = run_cli({"solve", example_file(1), "--n", "3"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("y_0: -1.3862943611e0*x^0\n") == 0);
    CHECK(r.out.find("y_1: 2.6856") != std::string::npos);
    CHECK(r.out.find("psi_3: ") != std::string::npos);
    CHECK(r.out.find("(grid 1000)") != std::string::npos);
    CHECK(r.err.empty());

    const Result one = run_cli({"solve", example_file(1), "--n", "1"});
    CHECK(one.code == 0);
    CHECK(one.out.find("y_1") == std::string::npos);
    CHECK(one.out.find("psi_1: -1.3862943611e0*x^0") != std::string::npos);
}

TEST_CASE("solve emits json") {
    const Result r = run_cli({"solve", example_file(2), "--n", "4", "--emit", "json", "--grid", "50"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["n"] == 4);
    CHECK(doc["components"].size() == 4);
    CHECK(doc["diagnostics"].size() == 3);
    CHECK(doc["max_error"]["grid"] == 50);
    CHECK(doc["max_error"]["value"].get<double>() < 1e-2);
    CHECK(doc["components"][0][0][1].get<double>() == 0.0);
}

TEST_CASE("dump-config echoes the canonical problem") {
    const std::string file = example_file(3);
    const Result r = run_cli({"solve", file, "--dump-config"});
    REQUIRE(r.code == 0);
    CHECK(r.out == run_cli({"example", "3"}).out);
}

TEST_CASE("input errors exit with code 3") {
    const Result r = run_cli({"solve", write_temp("missing.txt", "p_exponent = 0.5\nq_exponent = 0\nf = \"y\"\n"
                                                                 "eta1 = 0\nalpha1 = 1\nbeta1 = 0\n")});
    CHECK(r.code == adm::cli::kExitInput);
    CHECK(r.err.find("MissingKey(gamma1)") != std::string::npos);

    CHECK(run_cli({"solve", "/nonexistent/file.txt"}).code == adm::cli::kExitInput);
}

TEST_CASE("solver errors exit with code 4") {
    const Result r = run_cli({"solve", write_temp("resonant.txt", "p_exponent = 0.5\nq_exponent = -1\nf = \"1\"\n"
                                                                  "eta1 = 0\nalpha1 = 1\nbeta1 = 0\ngamma1 = 1\n")});
    CHECK(r.code == adm::cli::kExitSolver);
    CHECK(r.err.find("LogResonance") != std::string::npos);
}

TEST_CASE("residual") {
    const Result r = run_cli({"residual", example_file(2), "--grid", "1"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("# x residual\n1.0000000000e+00 ") == 0);
    CHECK(r.out.find("max |residual|: ") != std::string::npos);
}

TEST_CASE("table is deterministic") {
    const std::vector<std::string> args{"table", "--example", "1", "--alphas", "0.25,0.5", "--ns", "2,4", "--grid",
                                        "100"};
    const Result a = run_cli(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == run_cli(args).out);
    std::vector<std::string> serial = args;
    serial.push_back("--serial");
    CHECK(a.out == run_cli(serial).out);
    CHECK(a.out.find("# example 1, beta = 1, grid 100") == 0);
    CHECK(a.out.find("E2") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli({}).code == adm::cli::kExitUsage);
    CHECK(run_cli({"frobnicate"}).code == adm::cli::kExitUsage);
    CHECK(run_cli({"table", "--example", "7"}).code == adm::cli::kExitUsage);
    CHECK(run_cli({"residual", example_file(1), "--grid", "0"}).code == adm::cli::kExitUsage);
    CHECK(run_cli({"--help"}).code == 0);
}
