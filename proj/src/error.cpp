#include "adm/error.hpp"

namespace adm {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NonFiniteTerm: return "NonFiniteTerm";
    case ErrorCode::TermBlowup: return "TermBlowup";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::NonConstantBasePoint: return "NonConstantBasePoint";
    case ErrorCode::LogOfNonPositive: return "LogOfNonPositive";
    case ErrorCode::DivisionByZeroSeries: return "DivisionByZeroSeries";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnsupportedPower: return "UnsupportedPower";
    case ErrorCode::LogResonance: return "LogResonance";
    case ErrorCode::OuterResonance: return "OuterResonance";
    case ErrorCode::Divergent: return "Divergent";
    case ErrorCode::InvalidProblem: return "InvalidProblem";
    case ErrorCode::InvalidExactSolution: return "InvalidExactSolution";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::MissingKey: return "MissingKey";
    case ErrorCode::DuplicateKey: return "DuplicateKey";
    case ErrorCode::UnknownKey: return "UnknownKey";
    case ErrorCode::InvalidValue: return "InvalidValue";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, std::string message, std::string detail)
    : std::runtime_error(std::move(message)), code_(code), detail_(std::move(detail)) {}

std::string Error::tag() const {
    std::string out(to_string(code_));
    if (!detail_.empty()) {
        out += '(';
        out += detail_;
        out += ')';
    }
    return out;
}

Error Error::with_context(std::string_view context) const {
    std::string msg(context);
    msg += ": ";
    msg += what();
    return Error(code_, std::move(msg), detail_);
}

} // namespace adm
