#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bv {

enum class ErrorKind {
  InvalidInvariants,
  InternalInconsistency,
  InvalidPower,
  BaseMismatch,
  NotACurveClass,
  UnknownPreset,
  NonMinimal,
  InvalidVanishingOrders,
  InvalidCover,
  UnsupportedSplitting,
  AmbiguousDims,
  ParseError,
  Io,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Process exit code used by the CLI for an error of the given kind.
int exit_code(ErrorKind kind);

}  // namespace bv
