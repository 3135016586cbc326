#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fpg {

enum class ErrorCode {
  ZeroInverse,
  NotInvertible,
  BadMinorSize,
  NotSquare,
  UnknownGenerator,
  RankMismatch,
  IndexOutOfRange,
  BadConeOrder,
  LimitExceeded,
  CosetLimitExceeded,
  NotAHomomorphism,
  InvalidTable,
  NotCoprime,
  DimensionMismatch,
  InconsistentGrading,
  NoDeletableGenerator,
  RepresentationNotVerified,
  DegreeMismatch,
  DegreeTooLarge,
  StrandMismatch,
  InconsistentInput,
  NotInteger,
  BadLcm,
  MonotonicityViolation,
  FieldMismatch,
  Parse,
  Usage,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::BadMinorSize: return "BadMinorSize";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::BadConeOrder: return "BadConeOrder";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::CosetLimitExceeded: return "CosetLimitExceeded";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::InvalidTable: return "InvalidTable";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InconsistentGrading: return "InconsistentGrading";
    case ErrorCode::NoDeletableGenerator: return "NoDeletableGenerator";
    case ErrorCode::RepresentationNotVerified: return "RepresentationNotVerified";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::StrandMismatch: return "StrandMismatch";
    case ErrorCode::InconsistentInput: return "InconsistentInput";
    case ErrorCode::NotInteger: return "NotInteger";
    case ErrorCode::BadLcm: return "BadLcm";
    case ErrorCode::MonotonicityViolation: return "MonotonicityViolation";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::Usage: return "UsageError";
  }
  return "Unknown";
}

/// Every failure raised by the toolkit. The code identifies the contract
/// violated; parse and usage errors are the only input-format failures.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  bool is_input_error() const noexcept {
    return code_ == ErrorCode::Parse || code_ == ErrorCode::Usage;
  }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace fpg
