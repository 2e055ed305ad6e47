#pragma once

#include <stdexcept>
#include <string>

namespace hj {

enum class ErrorCode {
    DivisionByZeroConstantTerm,
    OrderTooSmall,
    BasePointMismatch,
    SingularJacobian,
    NondegeneracyFailure,
    NotAnIntegralElement,
    DegenerateFrame,
    SingularMatrix,
    NotRegular,
    NoAdmissibleGauge,
    ConstraintViolated,
    CharacteristicInitialData,
    ObstructionDetected,
    RankCollapse,
    NotClosed,
    SyntaxError,
    DomainError,
    ConfigError,
    VerificationFailed,
};

const char* error_name(ErrorCode code);

/// Every failure in the library is reported through this type; the code
/// names the condition and the message carries the details.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }
    const char* name() const { return error_name(code_); }

private:
    ErrorCode code_;
};

/// Parse errors also carry a 0-based character offset.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& message)
        : Error(ErrorCode::SyntaxError,
                message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace hj
