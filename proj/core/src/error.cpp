#include "unicomm/error.hpp"

namespace unicomm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NotSkewHermitian: return "NotSkewHermitian";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::SpectrumContainsMinusOne: return "SpectrumContainsMinusOne";
    case ErrorCode::EpsOutOfRange: return "EpsOutOfRange";
    case ErrorCode::PostconditionFailed: return "PostconditionFailed";
    case ErrorCode::NotAtMaximum: return "NotAtMaximum";
    case ErrorCode::ScanExhausted: return "ScanExhausted";
    case ErrorCode::NotScalarCommutator: return "NotScalarCommutator";
    case ErrorCode::MinusOneScalar: return "MinusOneScalar";
    case ErrorCode::RankAmbiguous: return "RankAmbiguous";
    case ErrorCode::DegenerateSplit: return "DegenerateSplit";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NoDecrease: return "NoDecrease";
    case ErrorCode::MalformedWord: return "MalformedWord";
    case ErrorCode::InfeasibleStart: return "InfeasibleStart";
    case ErrorCode::ParameterMismatch: return "ParameterMismatch";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace unicomm
