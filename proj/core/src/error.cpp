#include "hadalab/error.hpp"

namespace hadalab {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::ShiftOutOfRange: return "ShiftOutOfRange";
    case ErrorKind::BadModulus: return "BadModulus";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::RankTooLarge: return "RankTooLarge";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::BadOrder: return "BadOrder";
    case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ConstructionFailed: return "ConstructionFailed";
  }
  return "Error";
}

}  // namespace hadalab
