#include "lcomplex/error.hpp"

namespace lcx {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotMultipleOfL: return "NotMultipleOfL";
    case ErrorCode::RangeExceeded: return "RangeExceeded";
    case ErrorCode::Io: return "Io";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::BadVersion: return "BadVersion";
    case ErrorCode::Truncated: return "Truncated";
    case ErrorCode::BadChecksum: return "BadChecksum";
    case ErrorCode::Malformed: return "Malformed";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace lcx
