#include "adm/builtin_problems.hpp"

#include "adm/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace adm {

namespace {

// Parsed expressions never hold negative constants, so build them the same way.
Expr lit(double v) { return v < 0.0 ? Expr::neg(Expr::constant(-v)) : Expr::constant(v); }

// -c e^y (x yp + d)
Expr exponential_source(double c, double d) {
    return Expr::mul(Expr::mul(Expr::neg(lit(c)), Expr::exp(Expr::var_y())),
                     Expr::add(Expr::mul(Expr::var_x(), Expr::var_yp()), lit(d)));
}

} // namespace

Problem builtin_problem(int example, double alpha, double beta) {
    Problem p;
    p.alpha = alpha;
    p.alpha1 = 1.0;
    p.beta1 = 0.0;
    switch (example) {
    case 1:
        p.sigma = alpha + beta - 2.0;
        p.f = exponential_source(beta, alpha + beta - 1.0);
        p.eta1 = -std::log(4.0);
        p.gamma1 = -std::log(5.0);
        p.exact = Expr::ln(Expr::div(lit(1.0), Expr::add(lit(4.0), Expr::pow_x(beta))));
        break;
    case 2:
        p.sigma = alpha - 1.0;
        p.f = exponential_source(1.0, alpha);
        p.eta1 = -std::log(2.0);
        p.gamma1 = -std::log(3.0);
        p.exact = Expr::ln(Expr::div(lit(1.0), Expr::add(lit(2.0), Expr::var_x())));
        break;
    case 3:
        p.sigma = alpha + beta - 2.0;
        p.f = Expr::mul(lit(beta), Expr::add(Expr::mul(Expr::var_x(), Expr::var_yp()),
                                             Expr::mul(lit(alpha + beta - 1.0), Expr::var_y())));
        p.eta1 = 1.0;
        p.gamma1 = std::numbers::e;
        p.exact = Expr::exp(Expr::pow_x(beta));
        break;
    default:
        throw Error(ErrorCode::InvalidValue, "unknown example id " + std::to_string(example) + " (expected 1, 2 or 3)",
                    "example");
    }
    p.validate();
    return p;
}

} // namespace adm
