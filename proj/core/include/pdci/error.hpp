#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pdci {

enum class ErrorCode {
  kDuplicateEntry,
  kInvalidKey,
  kNotFound,
  kEmptyIndex,
  kInvalidDimension,
  kDimensionMismatch,
  kInvalidPoint,
  kInvalidParams,
  kInsufficientData,
  kParseError,
  kIoError,
};

std::string_view to_string(ErrorCode code);

// Every library failure is reported as an Error carrying a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Malformed input file; offset is the byte position where parsing failed.
class ParseError : public Error {
 public:
  ParseError(std::uint64_t offset, const std::string& what)
      : Error(ErrorCode::kParseError, what + " (at byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::uint64_t offset() const noexcept { return offset_; }

 private:
  std::uint64_t offset_;
};

}  // namespace pdci
