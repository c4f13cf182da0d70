#pragma once

// Cylinder/clopen algebra on Cantor space with exact dyadic measure, finite
// prefixes of Baire-space points, and the coding bijections every other
// module shares (Cantor pairing, recursive sequence codes, matrix layout).

#include "idealis/error.hpp"
#include "idealis/nat.hpp"

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace idealis {

/// Identifier of the pairing/sequence coding convention. Parameter files
/// carry it; files with another convention are rejected.
inline constexpr std::string_view kCodingConvention = "cantor-e1";

inline constexpr unsigned kHardMaxLevel = 24;

/// Working level cap. Read once from IDEALIS_MAX_LEVEL (default 12, clamped
/// to kHardMaxLevel).
unsigned max_level();

/// Throws LevelTooLarge when `level` exceeds max_level().
void check_level(std::size_t level);

using Mask = boost::dynamic_bitset<std::uint64_t>;

/// A finite 0/1 word; as a subset of 2^ω it denotes its cylinder.
class BitWord {
 public:
  BitWord() = default;
  explicit BitWord(std::vector<bool> bits) : bits_(std::move(bits)) {}

  /// Parses "0110"; throws std::invalid_argument on other characters.
  static BitWord parse(std::string_view text);
  /// The `index`-th word of length `length` in lexicographic order.
  static BitWord from_index(std::size_t length, std::uint64_t index);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  bool operator[](std::size_t i) const { return bits_[i]; }
  const std::vector<bool>& bits() const noexcept { return bits_; }

  /// Lexicographic rank among words of the same length (first bit most significant).
  std::uint64_t index() const;
  BitWord prefix(std::size_t length) const;
  BitWord complemented() const;
  void push_back(bool bit) { bits_.push_back(bit); }
  bool is_prefix_of(const BitWord& other) const;
  std::string str() const;

  friend bool operator==(const BitWord&, const BitWord&) = default;
  friend auto operator<=>(const BitWord& a, const BitWord& b) { return a.bits_ <=> b.bits_; }

 private:
  std::vector<bool> bits_;
};

/// Points of 2^ω are only ever known through a prefix.
using BitPrefix = BitWord;

/// A finite initial segment of a point of ω^ω.
class BairePrefix {
 public:
  BairePrefix() = default;
  explicit BairePrefix(std::vector<Nat> entries) : entries_(std::move(entries)) {}
  BairePrefix(std::initializer_list<Nat> entries) : entries_(entries) {}

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const Nat& operator[](std::size_t i) const { return entries_[i]; }
  /// Checked access; throws InsufficientPrefix(i + 1).
  const Nat& at(std::size_t i) const;
  const std::vector<Nat>& entries() const noexcept { return entries_; }
  void push_back(Nat value) { entries_.push_back(std::move(value)); }
  BairePrefix prefix(std::size_t length) const;

  friend bool operator==(const BairePrefix&, const BairePrefix&) = default;

 private:
  std::vector<Nat> entries_;
};

/// Exact non-negative dyadic rational numerator / 2^exponent, kept in lowest terms.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(Nat numerator, std::uint64_t exponent);

  static Dyadic zero() { return {}; }
  static Dyadic one() { return {1, 0}; }
  /// 2^-e
  static Dyadic pow2_neg(std::uint64_t e) { return {1, e}; }

  const Nat& numerator() const noexcept { return num_; }
  std::uint64_t exponent() const noexcept { return exp_; }
  bool is_zero() const noexcept { return num_ == 0; }

  Dyadic operator+(const Dyadic& other) const;
  /// Requires *this >= other.
  Dyadic operator-(const Dyadic& other) const;
  Dyadic& operator+=(const Dyadic& other) { return *this = *this + other; }

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  std::string str() const;

 private:
  Nat num_ = 0;
  std::uint64_t exp_ = 0;
};

/// A clopen subset of 2^ω in canonical single-level form: the least level at
/// which it is a union of cylinders, with the word set held as a 2^level-bit
/// mask indexed by lexicographic word rank. ∅ and 2^ω both sit at level 0.
class Clopen {
 public:
  /// The empty set.
  Clopen() : level_(0), mask_(1) {}

  static Clopen empty() { return {}; }
  static Clopen whole();
  static Clopen cylinder(const BitWord& word);
  /// Canonicalizes an arbitrary 2^level-bit mask.
  static Clopen from_mask(unsigned level, Mask mask);

  unsigned level() const noexcept { return level_; }
  const Mask& mask() const noexcept { return mask_; }
  std::size_t word_count() const { return mask_.count(); }
  /// Words in lexicographic order, all of length level().
  std::vector<BitWord> words() const;

  bool is_empty() const { return mask_.none(); }
  bool is_whole() const { return level_ == 0 && mask_.test(0); }

  /// The word mask after refining to `level` (>= level()).
  Mask mask_at(unsigned level) const;

  /// Whether the cylinder [word] is contained in / meets this set.
  bool contains_cylinder(const BitWord& word) const;
  bool meets_cylinder(const BitWord& word) const;

  friend bool operator==(const Clopen& a, const Clopen& b) {
    return a.level_ == b.level_ && a.mask_ == b.mask_;
  }

 private:
  Clopen(unsigned level, Mask mask) : level_(level), mask_(std::move(mask)) {}

  unsigned level_;
  Mask mask_;
};

Clopen canonicalize(unsigned level, std::span<const BitWord> words);
Dyadic measure(const Clopen& c);

Clopen unite(const Clopen& a, const Clopen& b);
Clopen intersect(const Clopen& a, const Clopen& b);
Clopen complement(const Clopen& a);
bool subset(const Clopen& a, const Clopen& b);
bool disjoint(const Clopen& a, const Clopen& b);

// --- coding bijections ------------------------------------------------------

/// Cantor pairing (m+n)(m+n+1)/2 + n.
Nat pair(const Nat& m, const Nat& n);
std::pair<Nat, Nat> unpair(const Nat& k);

/// Pairing on machine indices; throws IndexOutOfRange on overflow.
std::size_t pair_index(std::size_t m, std::size_t n);

/// e(<>) = 0, e(s^a) = pair(e(s), a) + 1.
Nat seq_code(std::span<const Nat> seq);
std::vector<Nat> seq_decode(const Nat& code);

/// f(pair(n, k)), i.e. entry (n, k) of the matrix coded by f.
/// Throws InsufficientPrefix(pair(n, k) + 1).
const Nat& matrix_entry(const BairePrefix& f, std::size_t n, std::size_t k);

/// Number of leading columns of row `row` present in `f`.
std::size_t matrix_row_length(const BairePrefix& f, std::size_t row);

/// Row `row` of the matrix coded by `f`, truncated to its available columns.
BairePrefix matrix_row(const BairePrefix& f, std::size_t row);

/// Lays rows out with matrix_entry(result, r, c) = rows[r][c]; cells not
/// covered by any row are 0. The result is as short as possible.
BairePrefix matrix_pack(std::span<const BairePrefix> rows);

}  // namespace idealis
