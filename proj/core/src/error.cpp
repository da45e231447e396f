#include "paige/error.hpp"

namespace paige {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InversionOfZero: return "InversionOfZero";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::UnsupportedPrime: return "UnsupportedPrime";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotUnitDeterminant: return "NotUnitDeterminant";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotALoop: return "NotALoop";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotUnit: return "NotUnit";
    case ErrorKind::IsomorphismFailure: return "IsomorphismFailure";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace paige
