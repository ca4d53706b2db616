#include "askw/error.hpp"

namespace askw {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrimeP: return "NonPrimeP";
    case ErrorKind::EllOutOfRange: return "EllOutOfRange";
    case ErrorKind::NonPositiveQ: return "NonPositiveQ";
    case ErrorKind::IOutOfRange: return "IOutOfRange";
    case ErrorKind::TOutOfRange: return "TOutOfRange";
    case ErrorKind::NonIntegralInput: return "NonIntegralInput";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::PointNotInMinkowskiSum: return "PointNotInMinkowskiSum";
    case ErrorKind::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case ErrorKind::VariableNotInA: return "VariableNotInA";
    case ErrorKind::WrongDegree: return "WrongDegree";
    case ErrorKind::WrongFibre: return "WrongFibre";
    case ErrorKind::NonHomogeneous: return "NonHomogeneous";
    case ErrorKind::DegenerateSpecialization: return "DegenerateSpecialization";
    case ErrorKind::BadSpecialization: return "BadSpecialization";
    case ErrorKind::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

}  // namespace askw
