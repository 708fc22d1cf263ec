#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hk {

enum class ErrorCode {
  InvalidBoard,
  InvalidMoves,
  DimensionTooSmall,
  Shape,
  OutOfBounds,
  UnsupportedInput,
  InvalidLayers,
  MissingSites,
  NotGluable,
  NoExtender,
  NotSeeded,
  EndpointMismatch,
  NotTourable,
  ConstraintConflict,
  Schema,
  Verification,
  Io,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every failure reported by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hk
