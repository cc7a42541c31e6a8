#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace adm {

enum class ErrorCode {
    NonFiniteTerm,
    TermBlowup,
    DomainError,
    OrderMismatch,
    NonConstantBasePoint,
    LogOfNonPositive,
    DivisionByZeroSeries,
    DivisionByZero,
    SyntaxError,
    UnsupportedPower,
    LogResonance,
    OuterResonance,
    Divergent,
    InvalidProblem,
    InvalidExactSolution,
    QuadratureFailure,
    OutOfRange,
    MissingKey,
    DuplicateKey,
    UnknownKey,
    InvalidValue,
    IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Structured failure raised by every module. `code()` is the machine-readable
/// tag; `detail()` carries an optional argument such as the missing key name,
/// which `tag()` renders as `Code(detail)`.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, std::string detail = {});

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }
    std::string tag() const;

    /// Same error with `context` prepended to the message.
    Error with_context(std::string_view context) const;

private:
    ErrorCode code_;
    std::string detail_;
};

} // namespace adm
