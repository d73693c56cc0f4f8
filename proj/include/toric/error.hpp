#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace toric {

enum class ErrorCode {
  // input validation
  NotPrimitive,
  NotFullDimensional,
  NotStrictlyConvex,
  RedundantRay,
  InvalidInput,
  InvalidGenerator,
  InvalidField,
  DimensionMismatch,
  // resource caps
  TooManyRays,
  SearchTooLarge,
  RankTooLarge,
  // input syntax
  ParseError,
};

enum class ErrorCategory { Parse, Validation, Cap };

constexpr const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::NotFullDimensional: return "NotFullDimensional";
    case ErrorCode::NotStrictlyConvex: return "NotStrictlyConvex";
    case ErrorCode::RedundantRay: return "RedundantRay";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InvalidGenerator: return "InvalidGenerator";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::TooManyRays: return "TooManyRays";
    case ErrorCode::SearchTooLarge: return "SearchTooLarge";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

constexpr ErrorCategory category(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooManyRays:
    case ErrorCode::SearchTooLarge:
    case ErrorCode::RankTooLarge: return ErrorCategory::Cap;
    case ErrorCode::ParseError: return ErrorCategory::Parse;
    default: return ErrorCategory::Validation;
  }
}

/// All library failures. `index` names the offending ray or generator (0-based) when
/// there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

}  // namespace toric
