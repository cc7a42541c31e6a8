#pragma once

#include "adm/solver.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace adm {

/// Line-oriented `key = value` problem description:
///
///     # comment
///     p_exponent = 0.5          # alpha in p(x) = x^alpha
///     q_exponent = -0.5         # sigma in q(x) = x^sigma
///     f      = "-1*exp(y)*(x*yp + 0.5)"
///     eta1   = -ln(4)
///     alpha1 = 1
///     beta1  = 0
///     gamma1 = -ln(5)
///     exact  = "ln(1/(4 + x^1))"   # optional
///
/// Numeric values are constant expressions in the nonlinearity grammar (a
/// plain literal being the common case). Every key except `exact` is
/// required exactly once; unknown keys are rejected. Errors carry the key as
/// detail: MissingKey(gamma1), DuplicateKey(f), UnknownKey(beta), InvalidValue(eta1).
Problem parse_problem(std::string_view text);
Problem load_problem(const std::filesystem::path& path);

/// Canonical text that parse_problem maps back to an equal Problem.
std::string dump_problem(const Problem& problem);

} // namespace adm
