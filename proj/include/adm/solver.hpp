#pragma once

#include "adm/expr.hpp"
#include "adm/gp_series.hpp"
#include "adm/singular_operator.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace adm {

/// (x^alpha y')' = x^sigma f(x, y, y') on (0, 1],
/// y(0) = eta1,  alpha1 y(1) + beta1 y'(1) = gamma1.
struct Problem {
    double alpha = 0.0;
    double sigma = 0.0;
    Expr f = Expr::constant(0.0);
    double eta1 = 0.0;
    double alpha1 = 1.0;
    double beta1 = 0.0;
    double gamma1 = 0.0;
    std::optional<Expr> exact;

    /// Throws InvalidProblem / InvalidExactSolution on violated invariants.
    void validate() const;
    OperatorContext context() const { return OperatorContext::make(alpha, sigma); }
    /// alpha1 h(1) + beta1 h'(1).
    double robin_denominator() const;

    friend bool operator==(const Problem&, const Problem&) = default;
};

struct StepDiagnostics {
    std::size_t step = 0;          // index k of the component y_k produced
    std::size_t adomian_terms = 0; // terms in A_{k-1}
    std::size_t component_terms = 0;
    double seconds = 0.0;
};

struct SolveReport {
    std::size_t n = 0;
    std::vector<GPSeries> components; // y_0 .. y_{n-1}
    GPSeries psi;                     // sum of components
    std::vector<StepDiagnostics> diagnostics;
};

struct SolveOptions {
    std::size_t term_cap = kDefaultTermCap;
};

inline constexpr std::size_t kDefaultComponents = 10;

/// Modified decomposition recursion:
///   y_0 = eta1
///   y_1 = (gamma1 - alpha1 eta1)/D h + alpha1/D [L^{-1} q A_0]_{x=1} h - L^{-1} q A_0
///   y_{k+1} = alpha1/D [L^{-1} q A_k]_{x=1} h - L^{-1} q A_k,   k >= 1
/// with D = alpha1 h(1) + beta1 h'(1) and A_k the Adomian polynomials of f.
SolveReport solve(const Problem& problem, std::size_t n, const SolveOptions& options = {});

/// psi_m = y_0 + ... + y_{m-1}, 1 <= m <= report.n.
GPSeries partial_sum(const SolveReport& report, std::size_t m);

} // namespace adm
