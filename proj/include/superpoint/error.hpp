#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace superpoint {

enum class ErrorCode {
    CompositeP,
    ReducibleModulus,
    DimensionMismatch,
    BadParameters,
    AlgebraMismatch,
    CharacteristicMismatch,
    FieldMismatch,
    ZeroPoint,
    IncompatiblePair,
    NotAPiPoint,
    RelationViolation,
    ZeroClass,
    OddInternalDegree,
    BudgetExceeded,
    Parse,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::CompositeP: return "CompositeP";
        case ErrorCode::ReducibleModulus: return "ReducibleModulus";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::BadParameters: return "BadParameters";
        case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
        case ErrorCode::CharacteristicMismatch: return "CharacteristicMismatch";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::ZeroPoint: return "ZeroPoint";
        case ErrorCode::IncompatiblePair: return "IncompatiblePair";
        case ErrorCode::NotAPiPoint: return "NotAPiPoint";
        case ErrorCode::RelationViolation: return "RelationViolation";
        case ErrorCode::ZeroClass: return "ZeroClass";
        case ErrorCode::OddInternalDegree: return "OddInternalDegree";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace superpoint
