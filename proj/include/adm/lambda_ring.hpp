#pragma once

#include "adm/gp_series.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace adm {

/// Truncated polynomial in the decomposition parameter lambda whose
/// coefficients are generalized power series in x:
///     a(x, lambda) = sum_{k=0}^{order} a_k(x) lambda^k.
class LambdaSeries {
public:
    explicit LambdaSeries(std::size_t order);
    LambdaSeries(std::size_t order, std::vector<GPSeries> coeffs);

    /// `c` at lambda^0, zero elsewhere.
    static LambdaSeries constant(std::size_t order, GPSeries c);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const GPSeries& operator[](std::size_t k) const { return coeffs_.at(k); }
    std::span<const GPSeries> coeffs() const noexcept { return coeffs_; }

    /// sum_k a_k(x) lambda^k at a real point.
    double evaluate(double x, double lambda) const;

    friend bool operator==(const LambdaSeries&, const LambdaSeries&) = default;

private:
    std::vector<GPSeries> coeffs_;
};

struct LiftedSolution {
    LambdaSeries y;
    LambdaSeries yp;
};

/// y(lambda) = sum y_k lambda^k and y'(lambda) = sum y_k' lambda^k, truncated
/// at `order`. Missing components are zero; extra ones are ignored.
LiftedSolution lift_solution(std::span<const GPSeries> components, std::size_t order);

LambdaSeries ring_add(const LambdaSeries& a, const LambdaSeries& b);
LambdaSeries ring_sub(const LambdaSeries& a, const LambdaSeries& b);
LambdaSeries ring_neg(const LambdaSeries& a);
LambdaSeries ring_scale(const LambdaSeries& a, double k);
/// Cauchy product truncated at the common order.
LambdaSeries ring_mul(const LambdaSeries& a, const LambdaSeries& b, std::size_t term_cap = kDefaultTermCap);

// The composed functions below require the lambda^0 coefficient to be a
// constant series; exp/ln/1/(.) of a genuine x-series has no finite
// generalized power series representation.
LambdaSeries ring_exp(const LambdaSeries& a, std::size_t term_cap = kDefaultTermCap);
LambdaSeries ring_ln(const LambdaSeries& a, std::size_t term_cap = kDefaultTermCap);
LambdaSeries ring_recip(const LambdaSeries& a, std::size_t term_cap = kDefaultTermCap);
LambdaSeries ring_powi(const LambdaSeries& a, int k, std::size_t term_cap = kDefaultTermCap);

/// Adomian polynomial A_n: the lambda^n coefficient of N(sum y_k lambda^k).
GPSeries extract_adomian(const LambdaSeries& f_of_lambda, std::size_t n);

} // namespace adm
