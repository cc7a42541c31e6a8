#pragma once

#include "adm/expr.hpp"
#include "adm/gp_series.hpp"
#include "adm/singular_operator.hpp"
#include "adm/solver.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace adm {

struct ErrorReport {
    std::size_t grid_size = 0;
    double max_error = 0.0;
    double max_point = 0.0;
    std::vector<std::pair<double, double>> pointwise; // (x, E(x)), filled on request
};

/// x_i = i / grid_size, i = 1..grid_size: excludes 0, includes 1.
std::vector<double> uniform_grid(std::size_t grid_size);

// Grid kernels come in pairs: a straight serial loop kept as the reference,
// and an OpenMP version that must produce bit-identical results.

/// max_i |psi(x_i) - exact(x_i)|. Throws InvalidExactSolution if `exact`
/// mentions y or yp, OutOfRange if grid_size < 2.
ErrorReport max_error(const GPSeries& psi, const Expr& exact, std::size_t grid_size, bool keep_pointwise = false);
ErrorReport max_error_serial(const GPSeries& psi, const Expr& exact, std::size_t grid_size,
                             bool keep_pointwise = false);

/// r(x_i) = (x^alpha psi')'(x_i) - x_i^sigma f(x_i, psi(x_i), psi'(x_i)).
std::vector<std::pair<double, double>> residual(const GPSeries& psi, const Problem& problem, std::size_t grid_size);
std::vector<std::pair<double, double>> residual_serial(const GPSeries& psi, const Problem& problem,
                                                       std::size_t grid_size);

/// Largest |r| over the listing, and where it occurs; `from` drops points x < from.
std::pair<double, double> max_abs_residual(const std::vector<std::pair<double, double>>& listing, double from = 0.0);

inline constexpr double kQuadratureTolerance = 1e-10;

/// Independent check of apply_Linv: the outer integral over s is done by
/// adaptive Gauss-Kronrod after a power substitution s = x w^m chosen to
/// cancel the strongest endpoint singularity; the inner integral of each
/// term is taken in closed form. Throws QuadratureFailure if the error
/// estimate exceeds `abs_tol`.
double quadrature_oracle(const OperatorContext& ctx, const GPSeries& g, double x,
                         double abs_tol = kQuadratureTolerance);

} // namespace adm
