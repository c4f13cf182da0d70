#pragma once

#include "idealis/error.hpp"
#include "idealis/space.hpp"
#include "idealis/suites.hpp"

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <string_view>

namespace idealis::verify::detail {

/// Deterministic per-case generator: the stream depends only on the run
/// seed, the property tag and the case index.
class Gen {
 public:
  Gen(std::uint64_t seed, std::string_view tag, std::uint64_t index);

  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  BitWord word(std::size_t length);
  /// Random clopen at `level` with each word present with probability p.
  Clopen clopen(unsigned level, double p);

 private:
  std::mt19937_64 rng_;
};

template <class... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream out;
  (out << ... << parts);
  return out.str();
}

std::string show(const Clopen& c);

// Suites, one per registered name.
SuiteReport suite_space_algebra(std::uint64_t seed);
SuiteReport suite_seq_coding(std::uint64_t seed);
SuiteReport suite_enum_bijection(std::uint64_t seed);
SuiteReport suite_kprime(std::uint64_t seed);
SuiteReport suite_kcomb(std::uint64_t seed);
SuiteReport suite_countable(std::uint64_t seed);
SuiteReport suite_meager_density(std::uint64_t seed);
SuiteReport suite_fxp_oracle(std::uint64_t seed);
// The fxp-oracle suite over all pairs of words of length <= max_len.
SuiteReport fxp_oracle_report(std::size_t max_len);
SuiteReport suite_null_guard(std::uint64_t seed);
SuiteReport suite_null_encoder(std::uint64_t seed);
SuiteReport suite_e_fullness(std::uint64_t seed);
SuiteReport suite_ksigma_diagonal(std::uint64_t seed);
SuiteReport suite_laver_oracle(std::uint64_t seed);
SuiteReport suite_tri_monotone(std::uint64_t seed);
SuiteReport suite_fubini_table(std::uint64_t seed);

}  // namespace idealis::verify::detail
