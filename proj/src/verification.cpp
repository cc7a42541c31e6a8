#include "adm/verification.hpp"

#include "adm/error.hpp"
#include "adm/parallel.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace adm {

namespace {

void check_exact(const Expr& exact) {
    const auto vars = free_vars(exact);
    if (vars.count(Variable::Y) != 0 || vars.count(Variable::Yp) != 0) {
        throw Error(ErrorCode::InvalidExactSolution, "exact solution must depend on x only, got " + to_string(exact));
    }
}

void check_grid(std::size_t grid_size, std::size_t minimum) {
    if (grid_size < minimum) {
        throw Error(ErrorCode::OutOfRange, "grid size must be at least " + std::to_string(minimum));
    }
}

std::string point_context(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "at x = %.17g", x);
    return buf;
}

double pointwise_error(const GPSeries& psi, const Expr& exact, double x) {
    return std::abs(psi.evaluate(x) - eval_real(exact, x, 0.0, 0.0));
}

ErrorReport reduce(std::vector<double> grid, std::vector<double> errors, bool keep_pointwise) {
    ErrorReport report;
    report.grid_size = grid.size();
    // First maximum wins, so serial and parallel fills reduce identically.
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (errors[i] > report.max_error || i == 0) {
            report.max_error = errors[i];
            report.max_point = grid[i];
        }
    }
    if (keep_pointwise) {
        report.pointwise.reserve(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) report.pointwise.emplace_back(grid[i], errors[i]);
    }
    return report;
}

struct ResidualKernel {
    GPSeries psi;
    GPSeries dpsi;
    GPSeries lpsi;
    const Problem& problem;

    ResidualKernel(const GPSeries& p, const Problem& prob)
        : psi(p), dpsi(differentiate(p)), lpsi(apply_L(prob.context(), p)), problem(prob) {}

    double operator()(double x) const {
        try {
            const double rhs = std::pow(x, problem.sigma) * eval_real(problem.f, x, psi.evaluate(x), dpsi.evaluate(x));
            return lpsi.evaluate(x) - rhs;
        } catch (const Error& err) {
            throw err.with_context(point_context(x));
        }
    }
};

} // namespace

std::vector<double> uniform_grid(std::size_t grid_size) {
    std::vector<double> grid(grid_size);
    for (std::size_t i = 0; i < grid_size; ++i) {
        grid[i] = static_cast<double>(i + 1) / static_cast<double>(grid_size);
    }
    return grid;
}

ErrorReport max_error_serial(const GPSeries& psi, const Expr& exact, std::size_t grid_size, bool keep_pointwise) {
    check_exact(exact);
    check_grid(grid_size, 2);
    std::vector<double> grid = uniform_grid(grid_size);
    std::vector<double> errors(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) errors[i] = pointwise_error(psi, exact, grid[i]);
    return reduce(std::move(grid), std::move(errors), keep_pointwise);
}

ErrorReport max_error(const GPSeries& psi, const Expr& exact, std::size_t grid_size, bool keep_pointwise) {
    check_exact(exact);
    check_grid(grid_size, 2);
    std::vector<double> grid = uniform_grid(grid_size);
    std::vector<double> errors(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) { errors[i] = pointwise_error(psi, exact, grid[i]); });
    return reduce(std::move(grid), std::move(errors), keep_pointwise);
}

std::vector<std::pair<double, double>> residual_serial(const GPSeries& psi, const Problem& problem,
                                                       std::size_t grid_size) {
    check_grid(grid_size, 1);
    const ResidualKernel kernel(psi, problem);
    std::vector<std::pair<double, double>> out;
    out.reserve(grid_size);
    for (double x : uniform_grid(grid_size)) out.emplace_back(x, kernel(x));
    return out;
}

std::vector<std::pair<double, double>> residual(const GPSeries& psi, const Problem& problem, std::size_t grid_size) {
    check_grid(grid_size, 1);
    const ResidualKernel kernel(psi, problem);
    const std::vector<double> grid = uniform_grid(grid_size);
    std::vector<std::pair<double, double>> out(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) { out[i] = {grid[i], kernel(grid[i])}; });
    return out;
}

std::pair<double, double> max_abs_residual(const std::vector<std::pair<double, double>>& listing, double from) {
    std::pair<double, double> best{0.0, 0.0};
    for (const auto& [x, r] : listing) {
        if (x < from) continue;
        if (std::abs(r) > best.first) best = {std::abs(r), x};
    }
    return best;
}

double quadrature_oracle(const OperatorContext& ctx, const GPSeries& g, double x, double abs_tol) {
    if (!(x > 0.0 && x <= 1.0)) throw Error(ErrorCode::DomainError, "oracle point must lie in (0, 1]");
    if (g.is_zero()) return 0.0;

    // s^{-alpha} [int_s^1 c t^r dt] = c/(r+1) (s^{-alpha} - s^{r+1-alpha}): a sum of
    // powers s^e, each e > -1.
    struct Power {
        double coeff;
        double e;
    };
    std::vector<Power> powers;
    double lead = -ctx.alpha; // smallest e
    for (const Term& t : g.terms()) {
        const double r = t.exponent + ctx.sigma;
        if (std::abs(r + 1.0) <= kExponentTolerance) {
            throw Error(ErrorCode::LogResonance, "oracle: inner integral of x^-1");
        }
        if (r <= ctx.alpha - 2.0 + kExponentTolerance) {
            throw Error(ErrorCode::Divergent, "oracle: outer integral does not converge");
        }
        const double inner = t.coeff / (r + 1.0);
        powers.push_back({inner, -ctx.alpha});
        powers.push_back({-inner, r + 1.0 - ctx.alpha});
        lead = std::min(lead, r + 1.0 - ctx.alpha);
    }

    // s = x w^m with m = 4/(1+lead) turns every s^e ds into a multiple of
    // w^p dw with p >= 3, so nothing is singular on [0, 1]. The factors are
    // folded per power to keep tiny w from overflowing s^e.
    const double m = 4.0 / (1.0 + lead);
    for (Power& p : powers) {
        p.coeff *= m * std::pow(x, p.e + 1.0);
        p.e = m * (p.e + 1.0) - 1.0;
    }
    auto integrand = [&](double w) {
        double sum = 0.0;
        for (const Power& p : powers) sum += p.coeff * std::pow(w, p.e);
        return sum;
    };

    double error = 0.0;
    const double value =
        boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, 0.0, 1.0, 15, 1e-13, &error);
    if (!std::isfinite(value) || error > abs_tol) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "quadrature error estimate %.3g exceeds %.3g", error, abs_tol);
        throw Error(ErrorCode::QuadratureFailure, buf);
    }
    return value;
}

} // namespace adm
