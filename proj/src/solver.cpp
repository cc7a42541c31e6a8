#include "adm/solver.hpp"

#include "adm/error.hpp"
#include "adm/lambda_ring.hpp"

#include <chrono>
#include <cmath>
#include <string>

namespace adm {

void Problem::validate() const {
    (void)context();
    auto finite = [](double v, const char* name) {
        if (!std::isfinite(v)) throw Error(ErrorCode::InvalidProblem, std::string(name) + " must be finite");
    };
    finite(eta1, "eta1");
    finite(alpha1, "alpha1");
    finite(beta1, "beta1");
    finite(gamma1, "gamma1");
    if (!(alpha1 > 0.0)) throw Error(ErrorCode::InvalidProblem, "alpha1 must be > 0");
    if (!(beta1 >= 0.0)) throw Error(ErrorCode::InvalidProblem, "beta1 must be >= 0");
    if (robin_denominator() == 0.0) throw Error(ErrorCode::InvalidProblem, "alpha1 h(1) + beta1 h'(1) vanishes");
    if (exact && (free_vars(*exact).count(Variable::Y) != 0 || free_vars(*exact).count(Variable::Yp) != 0)) {
        throw Error(ErrorCode::InvalidExactSolution, "exact solution may only depend on x");
    }
}

double Problem::robin_denominator() const {
    const OperatorContext ctx = context();
    return alpha1 * ctx.h1 + beta1 * ctx.hp1;
}

SolveReport solve(const Problem& problem, std::size_t n, const SolveOptions& options) {
    if (n == 0) throw Error(ErrorCode::OutOfRange, "need at least one component");
    problem.validate();

    const OperatorContext ctx = problem.context();
    const GPSeries h = h_series(ctx);
    const double denom = problem.robin_denominator();
    const double weight = problem.alpha1 / denom;
    const LambdaEvalOptions eval_options{options.term_cap};

    SolveReport report;
    report.n = n;
    report.components.reserve(n);
    report.components.push_back(GPSeries::constant(problem.eta1));

    for (std::size_t k = 0; k + 1 < n; ++k) {
        const auto start = std::chrono::steady_clock::now();
        try {
            // A_k only involves y_0..y_k, so order-k truncation is exact for it.
            const LiftedSolution lifted = lift_solution(report.components, k);
            const GPSeries adomian = extract_adomian(eval_lambda(problem.f, lifted.y, lifted.yp, eval_options), k);
            const GPSeries inverse = apply_Linv(ctx, adomian);
            double h_coeff = weight * Linv_at_one(ctx, adomian);
            if (k == 0) h_coeff += (problem.gamma1 - problem.alpha1 * problem.eta1) / denom;
            GPSeries next = sub(scale(h, h_coeff), inverse);
            if (next.size() > options.term_cap) {
                throw Error(ErrorCode::TermBlowup, "component has " + std::to_string(next.size()) + " terms");
            }
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
            report.diagnostics.push_back({k + 1, adomian.size(), next.size(), elapsed.count()});
            report.components.push_back(std::move(next));
        } catch (const Error& err) {
            throw err.with_context("step " + std::to_string(k + 1));
        }
    }

    std::vector<Term> all;
    for (const GPSeries& c : report.components) all.insert(all.end(), c.terms().begin(), c.terms().end());
    report.psi = GPSeries::normalize(std::move(all));
    return report;
}

GPSeries partial_sum(const SolveReport& report, std::size_t m) {
    if (m < 1 || m > report.components.size()) {
        throw Error(ErrorCode::OutOfRange, "partial sum index " + std::to_string(m) + " outside [1, " +
                                               std::to_string(report.components.size()) + "]");
    }
    std::vector<Term> all;
    for (std::size_t i = 0; i < m; ++i) {
        all.insert(all.end(), report.components[i].terms().begin(), report.components[i].terms().end());
    }
    return GPSeries::normalize(std::move(all));
}

} // namespace adm
