#include "adm/error_table.hpp"

#include "adm/builtin_problems.hpp"
#include "adm/error.hpp"
#include "adm/parallel.hpp"
#include "adm/solver.hpp"
#include "adm/verification.hpp"

#include <algorithm>
#include <cstdio>

namespace adm {

namespace {

void check_request(const TableRequest& request) {
    if (request.example < 1 || request.example > 3) {
        throw Error(ErrorCode::InvalidValue, "unknown example id " + std::to_string(request.example), "example");
    }
    if (request.alphas.empty() || request.betas.empty() || request.ns.empty()) {
        throw Error(ErrorCode::InvalidValue, "alphas, betas and ns must be non-empty", "table");
    }
    if (std::find(request.ns.begin(), request.ns.end(), std::size_t{0}) != request.ns.end()) {
        throw Error(ErrorCode::InvalidValue, "component counts must be >= 1", "ns");
    }
}

std::vector<TableCell> empty_cells(const TableRequest& request) {
    std::vector<TableCell> cells;
    for (double beta : request.betas) {
        for (double alpha : request.alphas) cells.push_back({alpha, beta, {}});
    }
    return cells;
}

void fill_cell(const TableRequest& request, TableCell& cell) {
    const Problem problem = builtin_problem(request.example, cell.alpha, cell.beta);
    const std::size_t n_max = *std::max_element(request.ns.begin(), request.ns.end());
    const SolveReport report = solve(problem, n_max);
    cell.errors.clear();
    for (std::size_t n : request.ns) {
        cell.errors.push_back(max_error_serial(partial_sum(report, n), *problem.exact, request.grid).max_error);
    }
}

} // namespace

ErrorTable compute_table_serial(const TableRequest& request) {
    check_request(request);
    ErrorTable table{request, empty_cells(request)};
    for (TableCell& cell : table.cells) fill_cell(request, cell);
    return table;
}

ErrorTable compute_table(const TableRequest& request) {
    check_request(request);
    ErrorTable table{request, empty_cells(request)};
    parallel_for(table.cells.size(), [&](std::size_t i) { fill_cell(request, table.cells[i]); });
    return table;
}

namespace {

void end_line(std::string& out) {
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += '\n';
}

} // namespace

std::string format_table(const ErrorTable& table) {
    std::string out;
    char buf[64];
    const auto& req = table.request;
    for (std::size_t b = 0; b < req.betas.size(); ++b) {
        if (b != 0) out += '\n';
        if (req.example == 2) {
            std::snprintf(buf, sizeof buf, "# example 2, grid %zu\n", req.grid);
        } else {
            std::snprintf(buf, sizeof buf, "# example %d, beta = %g, grid %zu\n", req.example, req.betas[b], req.grid);
        }
        out += buf;
        out += "alpha";
        for (std::size_t n : req.ns) {
            std::snprintf(buf, sizeof buf, "  %-12s", ("E" + std::to_string(n)).c_str());
            out += buf;
        }
        end_line(out);
        for (std::size_t a = 0; a < req.alphas.size(); ++a) {
            const TableCell& cell = table.cells[b * req.alphas.size() + a];
            std::snprintf(buf, sizeof buf, "%-5g", cell.alpha);
            out += buf;
            for (double e : cell.errors) {
                std::snprintf(buf, sizeof buf, "  %-12.5e", e);
                out += buf;
            }
            end_line(out);
        }
    }
    return out;
}

} // namespace adm
