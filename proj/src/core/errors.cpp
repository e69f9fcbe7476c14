#include "horadam/errors.hpp"

namespace horadam {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
        case ErrorCode::NotDivisible: return "NotDivisible";
        case ErrorCode::ZeroTerm: return "ZeroTerm";
        case ErrorCode::EqualRoots: return "EqualRoots";
        case ErrorCode::ZeroS: return "ZeroS";
        case ErrorCode::EqualIndices: return "EqualIndices";
        case ErrorCode::UnsupportedField: return "UnsupportedField";
        case ErrorCode::NotAdmissible: return "NotAdmissible";
        case ErrorCode::SchemeNotApplicable: return "SchemeNotApplicable";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::Parse: return "ParseError";
        case ErrorCode::IO: return "IOError";
    }
    return "Unknown";
}

}  // namespace horadam
