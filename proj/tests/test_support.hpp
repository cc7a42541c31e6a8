#pragma once

// Test-only helpers: deterministic generators and numerical oracles that do
// not share code paths with the library routines they check.

#include "adm/gp_series.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <random>
#include <vector>

namespace adm::test {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
}

/// Random series with `count` terms, exponents in [lo, hi], coefficients in [-1, 1].
inline GPSeries random_series(std::mt19937_64& gen, std::size_t count, double lo, double hi) {
    std::vector<Term> raw;
    for (std::size_t i = 0; i < count; ++i) raw.push_back({uniform(gen, -1.0, 1.0), uniform(gen, lo, hi)});
    return GPSeries::normalize(std::move(raw));
}

/// Raw term-by-term value, independent of GPSeries::evaluate.
inline double direct_sum(const std::vector<Term>& terms, double x) {
    double s = 0.0;
    for (const Term& t : terms) s += t.coeff * std::exp(t.exponent * std::log(x));
    return s;
}

template <typename F>
double central_difference(F&& f, double x, double h = 1e-5) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// int_0^x s^{-alpha} int_s^1 t^sigma g(t) dt ds with both integrals done
/// numerically by tanh-sinh quadrature. The outer variable is s = x u^4, which
/// softens the s -> 0 endpoint enough for the rule.
template <typename G>
double nested_numeric_Linv(double alpha, double sigma, G&& g, double x) {
    boost::math::quadrature::tanh_sinh<double> ts;
    auto inner = [&](double s) {
        if (s >= 1.0 - 1e-15) return 0.0;
        return ts.integrate([&](double t) { return std::pow(t, sigma) * g(t); }, s, 1.0, 1e-14);
    };
    auto outer = [&](double u) {
        const double s = x * u * u * u * u;
        if (s < 1e-60) return 0.0;
        return std::pow(s, -alpha) * inner(s) * 4.0 * x * u * u * u;
    };
    return ts.integrate(outer, 0.0, 1.0, 1e-12);
}

inline bool close_rel(double a, double b, double rel, double abs_floor = 0.0) {
    return std::abs(a - b) <= std::max(rel * std::max(std::abs(a), std::abs(b)), abs_floor);
}

/// Coefficient-wise equality with matching exponents.
inline bool same_terms(const GPSeries& a, const GPSeries& b, double rel, double abs_floor = 0.0) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a.terms()[i].exponent - b.terms()[i].exponent) > 1e-9) return false;
        if (!close_rel(a.terms()[i].coeff, b.terms()[i].coeff, rel, abs_floor)) return false;
    }
    return true;
}

} // namespace adm::test
