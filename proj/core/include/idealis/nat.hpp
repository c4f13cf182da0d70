#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

namespace idealis {

/// Arbitrary-precision natural number. Parameter entries, enumeration
/// indices and binomials all live here; ranks of deep clopen sets easily
/// exceed 64 bits.
using Nat = boost::multiprecision::cpp_int;

/// Narrowing conversion; empty when `value` is negative or does not fit.
inline std::optional<std::size_t> to_size(const Nat& value) {
  if (value < 0 || value > Nat(std::numeric_limits<std::size_t>::max())) {
    return std::nullopt;
  }
  return value.convert_to<std::size_t>();
}

inline std::string to_decimal(const Nat& value) { return value.str(); }

}  // namespace idealis
