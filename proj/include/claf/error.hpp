#pragma once

#include <stdexcept>
#include <string>

namespace claf {

enum class ErrorCode {
    MalformedRecord,
    UnknownLevel,
    DanglingEndpoint,
    IoFailure,
    SchemaMismatch,
    SchemaViolation,
    InvariantViolation,
    DegenerateInput,
    EmptySentence,
    LengthMismatch,
    DimensionMismatch,
    ZeroVector,
    EmptyField,
    InsufficientScores,
    OutOfRange,
    EmptyInput,
    InvalidConfig,
};

const char* error_code_name(ErrorCode code);

/// Exception carrying a machine-checkable error code next to the message.
class ClafError : public std::runtime_error {
public:
    ClafError(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace claf
