#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace a1deg {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  ZeroInput,
  UnsupportedField,
  InvalidField,
  RingMismatch,
  MissingAssignment,
  InexactDivision,
  NotZeroDimensional,
  UnexpectedMonomial,
  DegenerateForm,
  ZeroEntry,
  PointNotOnZeroLocus,
  IncompleteCover,
  NonInvertibleMatrix,
  DimensionMismatch,
  RetriesExhausted,
  Parse,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::MissingAssignment: return "MissingAssignment";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorKind::UnexpectedMonomial: return "UnexpectedMonomial";
    case ErrorKind::DegenerateForm: return "DegenerateForm";
    case ErrorKind::ZeroEntry: return "ZeroEntry";
    case ErrorKind::PointNotOnZeroLocus: return "PointNotOnZeroLocus";
    case ErrorKind::IncompleteCover: return "IncompleteCover";
    case ErrorKind::NonInvertibleMatrix: return "NonInvertibleMatrix";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::RetriesExhausted: return "RetriesExhausted";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a kind so front ends can map
/// it to a pipeline stage without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace a1deg
