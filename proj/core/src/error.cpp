#include "idealis/error.hpp"

namespace idealis {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InsufficientPrefix: return "InsufficientPrefix";
    case ErrorKind::MeasureTooLarge: return "MeasureTooLarge";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotDense: return "NotDense";
    case ErrorKind::InvariantViolated: return "InvariantViolated";
    case ErrorKind::InsufficientResolution: return "InsufficientResolution";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::LevelTooLarge: return "LevelTooLarge";
    case ErrorKind::CodingMismatch: return "CodingMismatch";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string message, std::optional<Nat> value)
    : std::runtime_error(std::move(message)), kind_(kind), value_(std::move(value)) {}

void throw_insufficient_prefix(const Nat& required_length, std::string_view what) {
  throw Error(ErrorKind::InsufficientPrefix,
              std::string(what) + " needs a prefix of length " + required_length.str(),
              required_length);
}

}  // namespace idealis
