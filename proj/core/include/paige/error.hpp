#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace paige {

enum class ErrorKind {
  InversionOfZero,
  ModulusMismatch,
  UnsupportedPrime,
  ZeroVector,
  NotUnitDeterminant,
  CapExceeded,
  NotClosed,
  NotALoop,
  TooLarge,
  NotUnit,
  IsomorphismFailure,
  NotSurjective,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Raised by every checked operation in the library. The kind identifies the
/// violated precondition; what() carries a human-readable detail.
class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace paige
