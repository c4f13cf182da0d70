#pragma once

// Brute-force reference evaluations used by the property suites. Each one
// recomputes its answer from the defining formula on small inputs without
// going through the library routine it is compared against.

#include "idealis/baire.hpp"
#include "idealis/space.hpp"
#include "idealis/tri.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace idealis::oracle {

/// Every clopen set whose least level is exactly `level` (<= 4), as 2^level-bit
/// masks in a std::uint64_t, ascending. Level 0 gives ∅ and 2^ω.
std::vector<std::uint64_t> canonical_masks(unsigned level);

/// Membership of the word w (length >= every word of c) in c, by prefix search
/// over c's word list.
bool contains_word(const Clopen& c, const BitWord& w);

/// The set of level-`level` words lying in c, by contains_word.
std::vector<bool> truncation(const Clopen& c, unsigned level);

/// Whether the cylinder [w] meets c, by scanning c's words.
bool meets(const Clopen& c, const BitWord& w);

/// All t-subsets of {0..N-1} in lexicographic order, by recursion.
std::vector<std::vector<std::size_t>> subsets_lex(std::size_t N, std::size_t t);

/// Half-open blocks [lo, hi) of the partition read off y.
using Blocks = std::vector<std::pair<std::size_t, std::size_t>>;
Blocks blocks_of(const std::vector<unsigned>& y);

/// F_{x,P} stage answer from the block formula on points of length `len`,
/// where bit i of a point is (v >> i) & 1. nullopt when block `from_block`
/// is missing or does not fit in len.
std::optional<Tri> fxp(std::uint32_t x, std::uint32_t z, std::size_t len, const Blocks& blocks,
                       std::size_t from_block);

/// |{n in [n0, n1) : f(n) < Φ(f|n)}| with Φ looked up directly on sequences.
std::size_t laver(const baire::PhiMap& phi, const std::vector<Nat>& f, std::size_t n0, std::size_t n1);

}  // namespace idealis::oracle
