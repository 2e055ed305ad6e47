#include "hessjet/error.hpp"

namespace hj {

const char* error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DivisionByZeroConstantTerm: return "DivisionByZeroConstantTerm";
        case ErrorCode::OrderTooSmall: return "OrderTooSmall";
        case ErrorCode::BasePointMismatch: return "BasePointMismatch";
        case ErrorCode::SingularJacobian: return "SingularJacobian";
        case ErrorCode::NondegeneracyFailure: return "NondegeneracyFailure";
        case ErrorCode::NotAnIntegralElement: return "NotAnIntegralElement";
        case ErrorCode::DegenerateFrame: return "DegenerateFrame";
        case ErrorCode::SingularMatrix: return "SingularMatrix";
        case ErrorCode::NotRegular: return "NotRegular";
        case ErrorCode::NoAdmissibleGauge: return "NoAdmissibleGauge";
        case ErrorCode::ConstraintViolated: return "ConstraintViolated";
        case ErrorCode::CharacteristicInitialData: return "CharacteristicInitialData";
        case ErrorCode::ObstructionDetected: return "ObstructionDetected";
        case ErrorCode::RankCollapse: return "RankCollapse";
        case ErrorCode::NotClosed: return "NotClosed";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::VerificationFailed: return "VerificationFailed";
    }
    return "UnknownError";
}

}  // namespace hj
