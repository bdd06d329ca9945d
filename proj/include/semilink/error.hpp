#pragma once

#include <stdexcept>
#include <string>

namespace semilink {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  ParseError,
  UnknownVariable,
  RingMismatch,
  AmbientMismatch,
  ZeroModule,
  NotCohenMacaulay,
  NotSemidualizing,
  ImproperIdeal,
  AnnihilationFailure,
  DimensionZero,
  AmbientNotCM,
  ResolutionTooShort,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with the byte offset into the input text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorCode::ParseError, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace semilink
