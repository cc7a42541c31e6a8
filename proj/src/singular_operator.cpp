#include "adm/singular_operator.hpp"

#include "adm/error.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace adm {

namespace {

void check_admissible(const OperatorContext& ctx, double r) {
    const double outer = ctx.alpha - 2.0;
    if (std::abs(r + 1.0) <= kExponentTolerance) {
        throw Error(ErrorCode::LogResonance, "term x^" + std::to_string(r) + " integrates to a logarithm");
    }
    if (std::abs(r - outer) <= kExponentTolerance) {
        throw Error(ErrorCode::OuterResonance,
                    "term x^" + std::to_string(r) + " resonates with x^(alpha-2) in the outer integral");
    }
    if (r < outer) {
        throw Error(ErrorCode::Divergent, "term x^" + std::to_string(r) + " makes the outer integral diverge (alpha = " +
                                              std::to_string(ctx.alpha) + ")");
    }
}

} // namespace

OperatorContext OperatorContext::make(double alpha, double sigma) {
    if (!(alpha >= 0.0 && alpha < 1.0)) {
        throw Error(ErrorCode::InvalidProblem, "p exponent alpha must lie in [0, 1), got " + std::to_string(alpha));
    }
    if (!std::isfinite(sigma)) throw Error(ErrorCode::InvalidProblem, "q exponent sigma must be finite");
    return OperatorContext{alpha, sigma, 1.0 / (1.0 - alpha), 1.0};
}

GPSeries h_series(const OperatorContext& ctx) { return GPSeries::monomial(ctx.h1, 1.0 - ctx.alpha); }

GPSeries apply_Linv(const OperatorContext& ctx, const GPSeries& g) {
    const double one_minus_alpha = 1.0 - ctx.alpha;
    std::vector<Term> raw;
    raw.reserve(2 * g.size());
    for (const Term& t : g.terms()) {
        const double r = t.exponent + ctx.sigma;
        check_admissible(ctx, r);
        const double inner = t.coeff / (r + 1.0);
        raw.push_back({inner / one_minus_alpha, one_minus_alpha});
        raw.push_back({-inner / (r + 2.0 - ctx.alpha), r + 2.0 - ctx.alpha});
    }
    return GPSeries::normalize(std::move(raw));
}

double Linv_at_one(const OperatorContext& ctx, const GPSeries& g) {
    const double one_minus_alpha = 1.0 - ctx.alpha;
    double sum = 0.0;
    for (const Term& t : g.terms()) {
        const double r = t.exponent + ctx.sigma;
        check_admissible(ctx, r);
        sum += t.coeff / (r + 1.0) * (1.0 / one_minus_alpha - 1.0 / (r + 2.0 - ctx.alpha));
    }
    return sum;
}

GPSeries apply_L(const OperatorContext& ctx, const GPSeries& u) {
    return differentiate(mul_monomial(differentiate(u), 1.0, ctx.alpha));
}

} // namespace adm
