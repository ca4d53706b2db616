#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace askw {

enum class ErrorKind {
  NonPrimeP,
  EllOutOfRange,
  NonPositiveQ,
  IOutOfRange,
  TOutOfRange,
  NonIntegralInput,
  NotDivisible,
  ZeroPolynomial,
  PointNotInMinkowskiSum,
  NonIntegralCoefficient,
  VariableNotInA,
  WrongDegree,
  WrongFibre,
  NonHomogeneous,
  DegenerateSpecialization,
  BadSpecialization,
  Unsupported,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure in the library is reported as an Error carrying
/// a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace askw
