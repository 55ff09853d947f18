#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

// Domain failures. Absent-but-legal results are std::optional instead.
enum class ErrorKind {
  kInvalidInput,
  kNotPrime,
  kNoOrigin,
  kKerBTrivial,
  kNotPointed,
  kSearchBudgetExceeded,
  kUnboundedFiber,
  kMissingDiagonalRow,
  kColumnNotInKernel,
  kEmptyFiber,
  kNonPrincipalDivisor,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace toric
