#pragma once

// Canonical enumerations consumed by the constructions: clopen sets of small
// measure (with an exact inverse), basic open sets of 2^ω and ω^ω, the index
// function over nonempty basic subsets, lexicographic words and combinadic
// subset ranking.

#include "idealis/nat.hpp"
#include "idealis/space.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace idealis::enumeration {

enum class BaseSpace { Cantor, Baire };

/// C^n_k: C^n_0 = ∅; for k >= 1 the k-th canonical clopen set of measure
/// < 2^-n, ordered by canonical level and then by word-mask value.
/// Throws LevelTooLarge when the set would sit above max_level().
Clopen clopen_enum(unsigned n, const Nat& k);

/// Inverse of clopen_enum. Throws MeasureTooLarge when measure(c) >= 2^-n.
Nat clopen_rank(unsigned n, const Clopen& c);

/// Number of canonical clopen sets of measure < 2^-n at canonical level `level` >= 1.
Nat clopen_level_count(unsigned n, unsigned level);

/// U_0 = ∅, U_1 = 2^ω, then cylinders by (length, lex): U_i is the cylinder
/// of the word whose binary expansion follows the leading 1 of i.
std::optional<BitWord> cantor_basic_word(const Nat& index);
Nat cantor_basic_index(const BitWord& word);
Clopen basic_open_cantor(const Nat& index);

/// U_0 = ∅, U_i = [seq_decode(i - 1)]. nullopt denotes ∅.
std::optional<BairePrefix> basic_open_baire(const Nat& index);
Nat baire_basic_index(const BairePrefix& stem);

/// Index of the (m+1)-th nonempty basic open set contained in U_n
/// (ascending); 0 when n = 0.
Nat kprime(const Nat& n, const Nat& m, BaseSpace space);

/// The k-th word of {0,1}^n in lexicographic order.
BitWord lex_word(std::size_t n, const Nat& k);

Nat binomial(std::size_t n, std::size_t k);

/// The r-th t-subset of {0, ..., N-1} in lexicographic order of sorted tuples.
std::vector<std::size_t> kcomb_unrank(std::size_t N, std::size_t t, const Nat& r);
/// Inverse of kcomb_unrank; `subset` must be strictly increasing and below N.
Nat kcomb_rank(std::size_t N, std::span<const std::size_t> subset);

/// Σ_{c < b} C(j, c), memoized.
Nat partial_binomial_sum(std::size_t j, std::size_t b);

}  // namespace idealis::enumeration
