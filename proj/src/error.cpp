#include "mtrace/error.hpp"

namespace mtrace {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::ScalarInput: return "ScalarInput";
    case ErrorKind::NotUnital: return "NotUnitalFunctional";
    case ErrorKind::NotUnitalPairing: return "NotUnitalPairing";
    case ErrorKind::NotTracial: return "NotTracial";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::WrongDimension: return "WrongDimension";
    case ErrorKind::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorKind::CharacteristicDividesN: return "CharacteristicDividesN";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace mtrace
