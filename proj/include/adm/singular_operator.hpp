#pragma once

#include "adm/gp_series.hpp"

namespace adm {

/// p(x) = x^alpha, q(x) = x^sigma, and the derived values h(1), h'(1).
struct OperatorContext {
    double alpha = 0.0;
    double sigma = 0.0;
    double h1 = 1.0;  // h(1) = 1/(1 - alpha)
    double hp1 = 1.0; // h'(1) = 1/p(1)

    /// Throws InvalidProblem unless 0 <= alpha < 1 and sigma is finite.
    static OperatorContext make(double alpha, double sigma);
};

/// h(x) = int_0^x ds / p(s) = x^(1-alpha) / (1-alpha).
GPSeries h_series(const OperatorContext& ctx);

/// Two-fold inverse operator applied to q*g:
///     L^{-1}[q g](x) = int_0^x s^{-alpha} int_s^1 t^sigma g(t) dt ds,
/// integrated term by term. A term c*x^r of q*g maps to
///     c * ( x^(1-alpha) / ((r+1)(1-alpha)) - x^(r+2-alpha) / ((r+1)(r+2-alpha)) ).
/// Exponents that would need logarithms (r = -1, r = alpha-2) or diverge
/// (r < alpha-2) raise LogResonance / OuterResonance / Divergent.
GPSeries apply_Linv(const OperatorContext& ctx, const GPSeries& g);

/// [L^{-1} q g] at x = 1.
double Linv_at_one(const OperatorContext& ctx, const GPSeries& g);

/// Forward operator L u = (x^alpha u')'.
GPSeries apply_L(const OperatorContext& ctx, const GPSeries& u);

} // namespace adm
