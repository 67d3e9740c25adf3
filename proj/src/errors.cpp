#include "bv/errors.hpp"

namespace bv {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInvariants: return "InvalidInvariants";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::InvalidPower: return "InvalidPower";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::NotACurveClass: return "NotACurveClass";
    case ErrorKind::UnknownPreset: return "UnknownPreset";
    case ErrorKind::NonMinimal: return "NonMinimal";
    case ErrorKind::InvalidVanishingOrders: return "InvalidVanishingOrders";
    case ErrorKind::InvalidCover: return "InvalidCover";
    case ErrorKind::UnsupportedSplitting: return "UnsupportedSplitting";
    case ErrorKind::AmbiguousDims: return "AmbiguousDims";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InternalInconsistency:
    case ErrorKind::AmbiguousDims:
      return 3;
    case ErrorKind::Io:
      return 4;
    default:
      return 2;
  }
}

}  // namespace bv
