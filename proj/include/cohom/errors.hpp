#pragma once

#include <stdexcept>
#include <string>

namespace cohom {

enum class ErrorCode {
  InconsistentParameters,
  AmbiguousSeries,
  IndexBelowStart,
  IndexOutOfRange,
  DivisionByZero,
  NotInvariant,
  DegenerateWronskian,
  PreconditionDefect,
  NonConvergent,
  TopDegreeInput,
  AxisInIndex,
  NotClosed,
  UnsupportedLemma,
  BadInput,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InconsistentParameters: return "InconsistentParameters";
    case ErrorCode::AmbiguousSeries: return "AmbiguousSeries";
    case ErrorCode::IndexBelowStart: return "IndexBelowStart";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::DegenerateWronskian: return "DegenerateWronskian";
    case ErrorCode::PreconditionDefect: return "PreconditionDefect";
    case ErrorCode::NonConvergent: return "NonConvergent";
    case ErrorCode::TopDegreeInput: return "TopDegreeInput";
    case ErrorCode::AxisInIndex: return "AxisInIndex";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::UnsupportedLemma: return "UnsupportedLemma";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

  // Tolerance failures map to CLI exit code 2, everything else to 1.
  bool tolerance_failure() const {
    return code_ == ErrorCode::PreconditionDefect ||
           code_ == ErrorCode::NonConvergent || code_ == ErrorCode::NotClosed;
  }

 private:
  ErrorCode code_;
};

}  // namespace cohom
