#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trop2 {

enum class ErrorCode {
  NegativeExponentAtTropZero,
  ZeroPolynomial,
  InadmissibleEvaluation,
  NonEvaluableExponent,
  EmptyPolyhedron,
  DimensionMismatch,
  ZeroCoefficient,
  CellNotInComplex,
  CoefficientDependsOnU,
  NonGenericDirection,
  IsolatedGenerator,
  UnsupportedDimension,
  ParseError,
  ValidationError,
};

std::string_view error_code_name(ErrorCode code);

/// All failures raised by the library carry a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace trop2
