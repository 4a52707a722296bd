#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace unicomm {

/// Machine-readable failure categories. The names are part of the report
/// format written by the CLI, so do not rename existing entries.
enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  NotUnitary,
  NotSkewHermitian,
  DomainError,
  SpectrumContainsMinusOne,
  EpsOutOfRange,
  PostconditionFailed,
  NotAtMaximum,
  ScanExhausted,
  NotScalarCommutator,
  MinusOneScalar,
  RankAmbiguous,
  DegenerateSplit,
  PreconditionViolated,
  NoDecrease,
  MalformedWord,
  InfeasibleStart,
  ParameterMismatch,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return to_string(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace unicomm
