#pragma once

#include "idealis/nat.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace idealis {

/// Contract errors raised by the library. Every kind maps to exactly one
/// CLI error name.
enum class ErrorKind {
  InsufficientPrefix,
  MeasureTooLarge,
  IndexOutOfRange,
  NotDense,
  InvariantViolated,
  InsufficientResolution,
  LengthMismatch,
  LevelTooLarge,
  CodingMismatch,
  UnknownSuite,
};

std::string_view error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::optional<Nat> value = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }
  /// The numeric payload, e.g. the required prefix length or the failing index.
  const std::optional<Nat>& value() const noexcept { return value_; }

 private:
  ErrorKind kind_;
  std::optional<Nat> value_;
};

[[noreturn]] void throw_insufficient_prefix(const Nat& required_length, std::string_view what);

}  // namespace idealis
