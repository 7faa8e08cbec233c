#include "witt/error.hpp"

namespace wittlab {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::CompositePrime: return "CompositePrime";
    case ErrorCode::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorCode::BadDegree: return "BadDegree";
    case ErrorCode::BadPrecision: return "BadPrecision";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::PrecisionUnderflow: return "PrecisionUnderflow";
    case ErrorCode::HenselFailure: return "HenselFailure";
    case ErrorCode::OddPrimeRequired: return "OddPrimeRequired";
    case ErrorCode::NotInGhostImage: return "NotInGhostImage";
    case ErrorCode::BadLevel: return "BadLevel";
    case ErrorCode::InternalNonzeroLead: return "InternalNonzeroLead";
    case ErrorCode::NotInKernel: return "NotInKernel";
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

}  // namespace wittlab
