#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mtrace {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  DimensionMismatch,
  InvalidField,
  Singular,
  ScalarInput,
  NotUnital,
  NotUnitalPairing,
  NotTracial,
  NotAbelian,
  BudgetExceeded,
  WrongDimension,
  ReduciblePolynomial,
  CharacteristicDividesN,
  PreconditionFailed,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every domain failure surfaces as an Error carrying a machine-readable kind.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace mtrace
