#include "sgalg/error.hpp"

namespace sgalg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPointed: return "NotPointed";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::NotNumerical: return "NotNumerical";
    case ErrorCode::NotSimplicial: return "NotSimplicial";
    case ErrorCode::NotCohenMacaulay: return "NotCohenMacaulay";
    case ErrorCode::NotStandardGraded: return "NotStandardGraded";
    case ErrorCode::PartitionNotConic: return "PartitionNotConic";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotSublattice: return "NotSublattice";
    case ErrorCode::TooManyVertices: return "TooManyVertices";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace sgalg
