#pragma once

#include "adm/solver.hpp"

namespace adm {

/// The three benchmark problems, instantiated for given (alpha, beta).
///
///  1: (x^a y')' = b x^(a+b-2) e^y (-x y' - (a+b-1)),  y(0) = -ln 4, y(1) = -ln 5,
///     exact y = ln(1/(4 + x^b)).
///  2: (x^a y')' = x^(a-1) e^y (-x y' - a),            y(0) = -ln 2, y(1) = -ln 3,
///     exact y = ln(1/(2 + x)). beta is ignored.
///  3: (x^a y')' = b x^(a+b-2) (x y' + (a+b-1) y),     y(0) = 1, y(1) = e,
///     exact y = exp(x^b).
///
/// Throws InvalidValue for any other id.
Problem builtin_problem(int example, double alpha, double beta);

} // namespace adm
