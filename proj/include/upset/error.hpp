#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace upset {

enum class ErrorCode {
  InvalidArgument,
  InvalidN,
  DegenerateTriangle,
  DegenerateBox,
  NotMaximalPlanar,
  NestingNotFound,
  MonotoneViolation,
  DuplicateCoordinate,
  TooLarge,
  InvalidPermutation,
  IoError,
  FormatError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidN: return "InvalidN";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::DegenerateBox: return "DegenerateBox";
    case ErrorCode::NotMaximalPlanar: return "NotMaximalPlanar";
    case ErrorCode::NestingNotFound: return "NestingNotFound";
    case ErrorCode::MonotoneViolation: return "MonotoneViolation";
    case ErrorCode::DuplicateCoordinate: return "DuplicateCoordinate";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::FormatError: return "FormatError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace upset
