#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vtypes {

enum class ErrorCode {
    DepthTooSmall,
    NotIncomparable,
    InvalidAddress,
    InvalidElement,
    SyntaxError,
    UnknownLabel,
    NoRoot,
    ReducednessViolation,
    TooFewLabels,
    NotApplicable,
    NonPrimitiveCycle,
    NotInStab,
    SearchExhausted,
    TypeMismatch,
    PreconditionViolated,
    SequenceExhausted,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported through this one exception type; the
// code identifies which contract was violated.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace vtypes
