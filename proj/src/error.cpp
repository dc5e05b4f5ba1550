#include "vtypes/error.hpp"

namespace vtypes {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::DepthTooSmall: return "DepthTooSmall";
    case ErrorCode::NotIncomparable: return "NotIncomparable";
    case ErrorCode::InvalidAddress: return "InvalidAddress";
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::NoRoot: return "NoRoot";
    case ErrorCode::ReducednessViolation: return "ReducednessViolation";
    case ErrorCode::TooFewLabels: return "TooFewLabels";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::NonPrimitiveCycle: return "NonPrimitiveCycle";
    case ErrorCode::NotInStab: return "NotInStab";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::SequenceExhausted: return "SequenceExhausted";
    }
    return "Unknown";
}

}  // namespace vtypes
