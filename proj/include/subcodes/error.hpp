#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace subcodes {

enum class ErrorKind {
  NonPrimeCharacteristic,
  ReducibleModulus,
  FieldTooLarge,
  FieldMismatch,
  DivisionByZero,
  LengthMismatch,
  DimensionMismatch,
  AmbientMismatch,
  NegativeRho,
  SearchSpaceTooLarge,
  Infeasible,
  ParamViolation,
  CodeTooLarge,
  BudgetExceeded,
  ZeroDimCodeword,
  EmptyCode,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// All domain failures raised by the library carry one of the kinds above so
/// callers (and the CLI) can report them without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace subcodes
