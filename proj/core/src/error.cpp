#include "toric/error.hpp"

namespace toric {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput: return "InvalidInput";
    case ErrorKind::kNotPrime: return "NotPrime";
    case ErrorKind::kNoOrigin: return "NoOrigin";
    case ErrorKind::kKerBTrivial: return "KerBTrivial";
    case ErrorKind::kNotPointed: return "NotPointed";
    case ErrorKind::kSearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::kUnboundedFiber: return "UnboundedFiber";
    case ErrorKind::kMissingDiagonalRow: return "MissingDiagonalRow";
    case ErrorKind::kColumnNotInKernel: return "ColumnNotInKernel";
    case ErrorKind::kEmptyFiber: return "EmptyFiber";
    case ErrorKind::kNonPrincipalDivisor: return "NonPrincipalDivisor";
  }
  return "Unknown";
}

}  // namespace toric
