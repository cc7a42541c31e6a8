#include "adm/lambda_ring.hpp"

#include "adm/error.hpp"

#include <cmath>
#include <string>

namespace adm {

namespace {

void require_same_order(const LambdaSeries& a, const LambdaSeries& b) {
    if (a.order() != b.order()) {
        throw Error(ErrorCode::OrderMismatch, "lambda-series orders differ: " + std::to_string(a.order()) +
                                                  " vs " + std::to_string(b.order()));
    }
}

double constant_base_point(const LambdaSeries& a, const char* op) {
    const GPSeries& a0 = a[0];
    if (!a0.is_constant()) {
        throw Error(ErrorCode::NonConstantBasePoint,
                    std::string(op) + " needs a constant lambda^0 coefficient, got " + to_display(a0));
    }
    return a0.constant_value();
}

} // namespace

LambdaSeries::LambdaSeries(std::size_t order) : coeffs_(order + 1) {}

LambdaSeries::LambdaSeries(std::size_t order, std::vector<GPSeries> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
}

LambdaSeries LambdaSeries::constant(std::size_t order, GPSeries c) {
    LambdaSeries out(order);
    out.coeffs_[0] = std::move(c);
    return out;
}

double LambdaSeries::evaluate(double x, double lambda) const {
    // Horner in lambda.
    double acc = 0.0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * lambda + coeffs_[k].evaluate(x);
    return acc;
}

LiftedSolution lift_solution(std::span<const GPSeries> components, std::size_t order) {
    std::vector<GPSeries> y(order + 1);
    std::vector<GPSeries> yp(order + 1);
    for (std::size_t k = 0; k <= order && k < components.size(); ++k) {
        y[k] = components[k];
        yp[k] = differentiate(components[k]);
    }
    return {LambdaSeries(order, std::move(y)), LambdaSeries(order, std::move(yp))};
}

LambdaSeries ring_add(const LambdaSeries& a, const LambdaSeries& b) {
    require_same_order(a, b);
    std::vector<GPSeries> out(a.order() + 1);
    for (std::size_t k = 0; k <= a.order(); ++k) out[k] = add(a[k], b[k]);
    return LambdaSeries(a.order(), std::move(out));
}

LambdaSeries ring_sub(const LambdaSeries& a, const LambdaSeries& b) {
    require_same_order(a, b);
    std::vector<GPSeries> out(a.order() + 1);
    for (std::size_t k = 0; k <= a.order(); ++k) out[k] = sub(a[k], b[k]);
    return LambdaSeries(a.order(), std::move(out));
}

LambdaSeries ring_neg(const LambdaSeries& a) { return ring_scale(a, -1.0); }

LambdaSeries ring_scale(const LambdaSeries& a, double k) {
    std::vector<GPSeries> out(a.order() + 1);
    for (std::size_t i = 0; i <= a.order(); ++i) out[i] = scale(a[i], k);
    return LambdaSeries(a.order(), std::move(out));
}

LambdaSeries ring_mul(const LambdaSeries& a, const LambdaSeries& b, std::size_t term_cap) {
    require_same_order(a, b);
    const std::size_t order = a.order();
    std::vector<GPSeries> out(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        std::vector<Term> raw;
        for (std::size_t j = 0; j <= k; ++j) {
            if (a[j].is_zero() || b[k - j].is_zero()) continue;
            GPSeries p = mul(a[j], b[k - j], term_cap);
            raw.insert(raw.end(), p.terms().begin(), p.terms().end());
        }
        out[k] = GPSeries::normalize(std::move(raw));
        if (out[k].size() > term_cap) {
            throw Error(ErrorCode::TermBlowup, "lambda^" + std::to_string(k) + " coefficient has " +
                                                   std::to_string(out[k].size()) + " terms");
        }
    }
    return LambdaSeries(order, std::move(out));
}

// Taylor-mode recurrences: with b = F(a) and b' = F'(a) a' in lambda,
// matching powers gives each b_k from a_1..a_k and b_0..b_{k-1}.

LambdaSeries ring_exp(const LambdaSeries& a, std::size_t term_cap) {
    const double a0 = constant_base_point(a, "exp");
    const std::size_t order = a.order();
    std::vector<GPSeries> b(order + 1);
    b[0] = GPSeries::constant(std::exp(a0));
    // k b_k = sum_{j=1}^{k} j a_j b_{k-j}
    for (std::size_t k = 1; k <= order; ++k) {
        std::vector<Term> raw;
        for (std::size_t j = 1; j <= k; ++j) {
            if (a[j].is_zero() || b[k - j].is_zero()) continue;
            GPSeries p = scale(mul(a[j], b[k - j], term_cap), static_cast<double>(j) / static_cast<double>(k));
            raw.insert(raw.end(), p.terms().begin(), p.terms().end());
        }
        b[k] = GPSeries::normalize(std::move(raw));
    }
    return LambdaSeries(order, std::move(b));
}

LambdaSeries ring_ln(const LambdaSeries& a, std::size_t term_cap) {
    const double a0 = constant_base_point(a, "ln");
    if (!(a0 > 0.0)) {
        throw Error(ErrorCode::LogOfNonPositive, "ln of series with base point " + std::to_string(a0));
    }
    const std::size_t order = a.order();
    std::vector<GPSeries> c(order + 1);
    c[0] = GPSeries::constant(std::log(a0));
    // a0 c_k = a_k - (1/k) sum_{j=1}^{k-1} j c_j a_{k-j}
    for (std::size_t k = 1; k <= order; ++k) {
        std::vector<Term> raw(a[k].terms().begin(), a[k].terms().end());
        for (std::size_t j = 1; j < k; ++j) {
            if (c[j].is_zero() || a[k - j].is_zero()) continue;
            GPSeries p =
                scale(mul(c[j], a[k - j], term_cap), -static_cast<double>(j) / static_cast<double>(k));
            raw.insert(raw.end(), p.terms().begin(), p.terms().end());
        }
        c[k] = scale(GPSeries::normalize(std::move(raw)), 1.0 / a0);
    }
    return LambdaSeries(order, std::move(c));
}

LambdaSeries ring_recip(const LambdaSeries& a, std::size_t term_cap) {
    const double a0 = constant_base_point(a, "reciprocal");
    if (a0 == 0.0) throw Error(ErrorCode::DivisionByZeroSeries, "reciprocal of series with zero base point");
    const std::size_t order = a.order();
    std::vector<GPSeries> b(order + 1);
    b[0] = GPSeries::constant(1.0 / a0);
    // b_k = -(1/a0) sum_{j=1}^{k} a_j b_{k-j}
    for (std::size_t k = 1; k <= order; ++k) {
        std::vector<Term> raw;
        for (std::size_t j = 1; j <= k; ++j) {
            if (a[j].is_zero() || b[k - j].is_zero()) continue;
            GPSeries p = mul(a[j], b[k - j], term_cap);
            raw.insert(raw.end(), p.terms().begin(), p.terms().end());
        }
        b[k] = scale(GPSeries::normalize(std::move(raw)), -1.0 / a0);
    }
    return LambdaSeries(order, std::move(b));
}

LambdaSeries ring_powi(const LambdaSeries& a, int k, std::size_t term_cap) {
    if (k < 0) return ring_powi(ring_recip(a, term_cap), -k, term_cap);
    LambdaSeries result = LambdaSeries::constant(a.order(), GPSeries::constant(1.0));
    LambdaSeries base = a;
    auto e = static_cast<unsigned>(k);
    while (e != 0) {
        if (e & 1U) result = ring_mul(result, base, term_cap);
        e >>= 1U;
        if (e != 0) base = ring_mul(base, base, term_cap);
    }
    return result;
}

GPSeries extract_adomian(const LambdaSeries& f_of_lambda, std::size_t n) {
    if (n > f_of_lambda.order()) {
        throw Error(ErrorCode::OrderMismatch, "A_" + std::to_string(n) + " requested from a lambda-series of order " +
                                                  std::to_string(f_of_lambda.order()));
    }
    return f_of_lambda[n];
}

} // namespace adm
