#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spikelss {

enum class ErrorCode {
    InvalidArgument,
    ZeroArgument,
    NoConvergence,
    OnSupport,
    DegenerateSupport,
    BranchCut,
    UnsupportedRatio,
    AtomCollision,
    IndexOutOfRange,
    AssumptionViolation,
    TooLarge,
    NonPositiveVariance,
    SingularMatrix,
    NonIdentityBulk,
    MultiplicityViolation,
    OutOfRange,
    GateViolation,
    ShapeMismatch,
    ParseError,
    SchemaError,
    IoError,
};

inline constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "invalid_argument";
        case ErrorCode::ZeroArgument: return "zero_argument";
        case ErrorCode::NoConvergence: return "no_convergence";
        case ErrorCode::OnSupport: return "on_support";
        case ErrorCode::DegenerateSupport: return "degenerate_support";
        case ErrorCode::BranchCut: return "branch_cut";
        case ErrorCode::UnsupportedRatio: return "unsupported_ratio";
        case ErrorCode::AtomCollision: return "atom_collision";
        case ErrorCode::IndexOutOfRange: return "index_out_of_range";
        case ErrorCode::AssumptionViolation: return "assumption_violation";
        case ErrorCode::TooLarge: return "too_large";
        case ErrorCode::NonPositiveVariance: return "non_positive_variance";
        case ErrorCode::SingularMatrix: return "singular_matrix";
        case ErrorCode::NonIdentityBulk: return "non_identity_bulk";
        case ErrorCode::MultiplicityViolation: return "multiplicity_violation";
        case ErrorCode::OutOfRange: return "out_of_range";
        case ErrorCode::GateViolation: return "gate_violation";
        case ErrorCode::ShapeMismatch: return "shape_mismatch";
        case ErrorCode::ParseError: return "parse_error";
        case ErrorCode::SchemaError: return "schema_error";
        case ErrorCode::IoError: return "io_error";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool ok, ErrorCode code, const std::string& message) {
    if (!ok) fail(code, message);
}

}  // namespace spikelss
