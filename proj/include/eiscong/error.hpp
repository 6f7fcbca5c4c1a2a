#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eiscong {

enum class ErrorCode {
    InvalidArgument,
    NotPIntegral,
    NotAUnit,
    RingMismatch,
    PrecisionTooLow,
    MOutOfRange,
    DNotCoprime,
    ParameterOutOfRange,
    BudgetExceeded,
    OddWeight,
    QuasimodularWeight,
    WeightMismatch,
    CacheFormat,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NotPIntegral: return "NotPIntegral";
        case ErrorCode::NotAUnit: return "NotAUnit";
        case ErrorCode::RingMismatch: return "RingMismatch";
        case ErrorCode::PrecisionTooLow: return "PrecisionTooLow";
        case ErrorCode::MOutOfRange: return "MOutOfRange";
        case ErrorCode::DNotCoprime: return "DNotCoprime";
        case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::OddWeight: return "OddWeight";
        case ErrorCode::QuasimodularWeight: return "QuasimodularWeight";
        case ErrorCode::WeightMismatch: return "WeightMismatch";
        case ErrorCode::CacheFormat: return "CacheFormat";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI) can turn it into a structured record.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace eiscong
