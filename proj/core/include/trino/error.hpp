#ifndef TRINO_ERROR_HPP
#define TRINO_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace trino {

enum class ErrorCode {
    InvalidArgument,
    NonIntegerCoefficient,
    NotRepresentable,
    ConvergenceFailure,
    ClassificationMismatch,
    QuadratureBudgetExceeded,
    CoprimalityViolated,
    DominanceViolated,
    DivergenceDetected,
    GcdNotOne,
    InternalVerificationFailure,
    ParityViolated,
    NoBoundAvailable,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonIntegerCoefficient: return "NonIntegerCoefficient";
    case ErrorCode::NotRepresentable: return "NotRepresentable";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::ClassificationMismatch: return "ClassificationMismatch";
    case ErrorCode::QuadratureBudgetExceeded: return "QuadratureBudgetExceeded";
    case ErrorCode::CoprimalityViolated: return "CoprimalityViolated";
    case ErrorCode::DominanceViolated: return "DominanceViolated";
    case ErrorCode::DivergenceDetected: return "DivergenceDetected";
    case ErrorCode::GcdNotOne: return "GcdNotOne";
    case ErrorCode::InternalVerificationFailure: return "InternalVerificationFailure";
    case ErrorCode::ParityViolated: return "ParityViolated";
    case ErrorCode::NoBoundAvailable: return "NoBoundAvailable";
    }
    return "Unknown";
}

/// Every domain failure raised by the library. The code is stable and is
/// what the CLI reports in machine-readable mode.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace trino

#endif
