#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hadalab {

enum class ErrorKind {
  NotAUnit,
  LengthMismatch,
  ShiftOutOfRange,
  BadModulus,
  NotPrime,
  RankTooLarge,
  NotInvariant,
  BadOrder,
  UnsupportedDegree,
  TooLarge,
  ParseError,
  ConstructionFailed,
};

std::string_view error_name(ErrorKind kind) noexcept;

// Domain error carrying a stable kind; the CLI prints error_name(kind()).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hadalab
