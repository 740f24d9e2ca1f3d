#include "pdci/error.hpp"

namespace pdci {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateEntry: return "DuplicateEntry";
    case ErrorCode::kInvalidKey: return "InvalidKey";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kEmptyIndex: return "EmptyIndex";
    case ErrorCode::kInvalidDimension: return "InvalidDimension";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInvalidPoint: return "InvalidPoint";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kInsufficientData: return "InsufficientData";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace pdci
