#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace adm {

struct TableRequest {
    int example = 1;
    std::vector<double> alphas{0.25, 0.5, 0.75};
    std::vector<double> betas{1.0};
    std::vector<std::size_t> ns{5, 8, 10};
    std::size_t grid = 1000;
};

struct TableCell {
    double alpha = 0.0;
    double beta = 0.0;
    std::vector<double> errors; // E^n for each requested n, in request order
};

struct ErrorTable {
    TableRequest request;
    std::vector<TableCell> cells; // beta-major, then alpha, in request order
};

/// One solve per (beta, alpha) pair at n = max(ns); cells run in parallel.
ErrorTable compute_table(const TableRequest& request);
ErrorTable compute_table_serial(const TableRequest& request);

/// One block per beta: a header line, then rows `alpha  E5  E8  E10` with
/// six significant digits.
std::string format_table(const ErrorTable& table);

} // namespace adm
