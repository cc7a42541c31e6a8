#include "cli.hpp"

#include "adm/builtin_problems.hpp"
#include "adm/error.hpp"
#include "adm/error_table.hpp"
#include "adm/gp_series.hpp"
#include "adm/problem_file.hpp"
#include "adm/solver.hpp"
#include "adm/verification.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <string>
#include <vector>

namespace adm::cli {

namespace {

int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::UnsupportedPower:
    case ErrorCode::MissingKey:
    case ErrorCode::DuplicateKey:
    case ErrorCode::UnknownKey:
    case ErrorCode::InvalidValue:
    case ErrorCode::IoError:
    case ErrorCode::InvalidProblem:
    case ErrorCode::InvalidExactSolution: return kExitInput;
    default: return kExitSolver;
    }
}

std::string sci(double v, int digits) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*e", digits, v);
    return buf;
}

nlohmann::json series_json(const GPSeries& s) {
    nlohmann::json terms = nlohmann::json::array();
    for (const Term& t : s.terms()) terms.push_back({t.coeff, t.exponent});
    return terms;
}

struct SolveArgs {
    std::string file;
    std::size_t n = kDefaultComponents;
    std::size_t grid = 1000;
    std::string emit = "text";
    bool dump_config = false;
};

int cmd_solve(const SolveArgs& args, std::ostream& out) {
    const Problem problem = load_problem(args.file);
    if (args.dump_config) {
        out << dump_problem(problem);
        return kExitOk;
    }
    const SolveReport report = solve(problem, args.n);
    std::optional<ErrorReport> error;
    if (problem.exact) error = max_error(report.psi, *problem.exact, args.grid);

    if (args.emit == "json") {
        nlohmann::json doc;
        doc["n"] = report.n;
        doc["components"] = nlohmann::json::array();
        for (const GPSeries& c : report.components) doc["components"].push_back(series_json(c));
        doc["psi"] = series_json(report.psi);
        doc["diagnostics"] = nlohmann::json::array();
        for (const StepDiagnostics& d : report.diagnostics) {
            doc["diagnostics"].push_back({{"step", d.step},
                                          {"adomian_terms", d.adomian_terms},
                                          {"component_terms", d.component_terms},
                                          {"seconds", d.seconds}});
        }
        if (error) doc["max_error"] = {{"value", error->max_error}, {"x", error->max_point}, {"grid", args.grid}};
        out << doc.dump(2) << '\n';
        return kExitOk;
    }

    for (std::size_t k = 0; k < report.components.size(); ++k) {
        out << "y_" << k << ": " << to_display(report.components[k]) << '\n';
    }
    out << "psi_" << report.n << ": " << to_display(report.psi) << '\n';
    if (error) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "E^%zu: %.6e at x = %.6g (grid %zu)\n", report.n, error->max_error,
                      error->max_point, args.grid);
        out << buf;
    }
    return kExitOk;
}

int cmd_residual(const SolveArgs& args, std::ostream& out) {
    const Problem problem = load_problem(args.file);
    if (args.dump_config) {
        out << dump_problem(problem);
        return kExitOk;
    }
    const SolveReport report = solve(problem, args.n);
    const auto listing = residual(report.psi, problem, args.grid);
    out << "# x residual\n";
    for (const auto& [x, r] : listing) out << sci(x, 10) << ' ' << sci(r, 10) << '\n';
    const auto [worst, where] = max_abs_residual(listing);
    out << "max |residual|: " << sci(worst, 6) << " at x = " << sci(where, 6) << '\n';
    return kExitOk;
}

int cmd_table(const TableRequest& request, bool serial, std::ostream& out) {
    const ErrorTable table = serial ? compute_table_serial(request) : compute_table(request);
    out << format_table(table);
    return kExitOk;
}

int cmd_example(int id, double alpha, double beta, std::ostream& out) {
    out << dump_problem(builtin_problem(id, alpha, beta));
    return kExitOk;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Modified Adomian decomposition for doubly singular boundary value problems", "adm"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Compute components y_0..y_{n-1} and psi_n for a problem file");
    solve_cmd->add_option("file", solve_args.file, "Problem file")->required();
    solve_cmd->add_option("--n", solve_args.n, "Number of components")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--grid", solve_args.grid, "Grid size for the maximum error")->check(CLI::Range(2, 1 << 24));
    solve_cmd->add_option("--emit", solve_args.emit, "Output format")->check(CLI::IsMember({"text", "json"}));
    solve_cmd->add_flag("--dump-config", solve_args.dump_config, "Print the loaded problem in canonical form and exit");

    SolveArgs residual_args;
    auto* residual_cmd = app.add_subcommand("residual", "List the ODE residual of psi_n on a uniform grid");
    residual_cmd->add_option("file", residual_args.file, "Problem file")->required();
    residual_cmd->add_option("--n", residual_args.n, "Number of components")->check(CLI::PositiveNumber);
    residual_cmd->add_option("--grid", residual_args.grid, "Grid size")->check(CLI::Range(1, 1 << 24));
    residual_cmd->add_flag("--dump-config", residual_args.dump_config,
                           "Print the loaded problem in canonical form and exit");

    TableRequest request;
    bool serial = false;
    auto* table_cmd = app.add_subcommand("table", "Maximum-error table for a built-in example");
    table_cmd->add_option("--example", request.example, "Example id")->required()->check(CLI::IsMember({1, 2, 3}));
    table_cmd->add_option("--alphas", request.alphas, "p exponents")->delimiter(',');
    table_cmd->add_option("--betas", request.betas, "beta values (ignored by example 2)")->delimiter(',');
    table_cmd->add_option("--ns", request.ns, "Component counts")->delimiter(',');
    table_cmd->add_option("--grid", request.grid, "Grid size")->check(CLI::Range(2, 1 << 24));
    table_cmd->add_flag("--serial", serial, "Use the serial reference kernel");

    int example_id = 1;
    double example_alpha = 0.5;
    double example_beta = 1.0;
    auto* example_cmd = app.add_subcommand("example", "Print a built-in example as a problem file");
    example_cmd->add_option("id", example_id, "Example id")->required()->check(CLI::IsMember({1, 2, 3}));
    example_cmd->add_option("--alpha", example_alpha, "p exponent");
    example_cmd->add_option("--beta", example_beta, "beta parameter");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*solve_cmd) return cmd_solve(solve_args, out);
        if (*residual_cmd) return cmd_residual(residual_args, out);
        if (*table_cmd) return cmd_table(request, serial, out);
        if (*example_cmd) return cmd_example(example_id, example_alpha, example_beta, out);
    } catch (const Error& e) {
        err << "error: " << e.tag() << ": " << e.what() << '\n';
        return exit_code_for(e.code());
    }
    return kExitUsage;
}

} // namespace adm::cli
