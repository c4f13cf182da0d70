#include "idealis/space.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace idealis {

unsigned max_level() {
  static const unsigned cap = [] {
    unsigned value = 12;
    if (const char* env = std::getenv("IDEALIS_MAX_LEVEL")) {
      std::string_view text(env);
      unsigned parsed = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), parsed);
      if (ec == std::errc() && ptr == text.data() + text.size()) value = parsed;
    }
    return std::min(value, kHardMaxLevel);
  }();
  return cap;
}

void check_level(std::size_t level) {
  if (level > max_level()) {
    throw Error(ErrorKind::LevelTooLarge,
                "level " + std::to_string(level) + " exceeds the working cap " +
                    std::to_string(max_level()),
                Nat(level));
  }
}

// --- BitWord ------------------------------------------------------------------

BitWord BitWord::parse(std::string_view text) {
  std::vector<bool> bits;
  bits.reserve(text.size());
  for (char ch : text) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("bit word must contain only 0 and 1");
    bits.push_back(ch == '1');
  }
  return BitWord(std::move(bits));
}

BitWord BitWord::from_index(std::size_t length, std::uint64_t index) {
  if (length < 64 && index >> length != 0) {
    throw Error(ErrorKind::IndexOutOfRange,
                "word index " + std::to_string(index) + " needs more than " +
                    std::to_string(length) + " bits",
                Nat(index));
  }
  std::vector<bool> bits(length, false);
  for (std::size_t i = 0; i < length && i < 64; ++i) {
    bits[length - 1 - i] = (index >> i) & 1U;
  }
  return BitWord(std::move(bits));
}

std::uint64_t BitWord::index() const {
  if (bits_.size() > 63) {
    throw Error(ErrorKind::IndexOutOfRange, "word too long to index", Nat(bits_.size()));
  }
  std::uint64_t value = 0;
  for (bool b : bits_) value = (value << 1) | (b ? 1U : 0U);
  return value;
}

BitWord BitWord::prefix(std::size_t length) const {
  length = std::min(length, bits_.size());
  return BitWord(std::vector<bool>(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(length)));
}

BitWord BitWord::complemented() const {
  std::vector<bool> bits(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) bits[i] = !bits_[i];
  return BitWord(std::move(bits));
}

bool BitWord::is_prefix_of(const BitWord& other) const {
  return bits_.size() <= other.bits_.size() &&
         std::equal(bits_.begin(), bits_.end(), other.bits_.begin());
}

std::string BitWord::str() const {
  std::string out;
  out.reserve(bits_.size());
  for (bool b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

// --- BairePrefix -------------------------------------------------------------

const Nat& BairePrefix::at(std::size_t i) const {
  if (i >= entries_.size()) throw_insufficient_prefix(Nat(i) + 1, "Baire prefix access");
  return entries_[i];
}

BairePrefix BairePrefix::prefix(std::size_t length) const {
  length = std::min(length, entries_.size());
  return BairePrefix(std::vector<Nat>(entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(length)));
}

// --- Dyadic ------------------------------------------------------------------

Dyadic::Dyadic(Nat numerator, std::uint64_t exponent) : num_(std::move(numerator)), exp_(exponent) {
  if (num_ < 0) throw std::invalid_argument("dyadic numerator must be non-negative");
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  const std::uint64_t shift = std::min<std::uint64_t>(boost::multiprecision::lsb(num_), exp_);
  num_ >>= shift;
  exp_ -= shift;
}

Dyadic Dyadic::operator+(const Dyadic& other) const {
  const std::uint64_t e = std::max(exp_, other.exp_);
  return {(num_ << (e - exp_)) + (other.num_ << (e - other.exp_)), e};
}

Dyadic Dyadic::operator-(const Dyadic& other) const {
  const std::uint64_t e = std::max(exp_, other.exp_);
  Nat a = num_ << (e - exp_);
  Nat b = other.num_ << (e - other.exp_);
  if (a < b) throw std::domain_error("negative dyadic difference");
  return {a - b, e};
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const std::uint64_t e = std::max(a.exp_, b.exp_);
  const Nat lhs = a.num_ << (e - a.exp_);
  const Nat rhs = b.num_ << (e - b.exp_);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Dyadic::str() const {
  if (exp_ == 0) return num_.str();
  return num_.str() + "/2^" + std::to_string(exp_);
}

// --- Clopen ------------------------------------------------------------------

namespace {

std::size_t words_at(unsigned level) { return std::size_t{1} << level; }

bool reducible(const Mask& mask) {
  for (std::size_t i = 0; i + 1 < mask.size(); i += 2) {
    if (mask[i] != mask[i + 1]) return false;
  }
  return true;
}

}  // namespace

Clopen Clopen::whole() {
  Mask m(1);
  m.set(0);
  return Clopen(0, std::move(m));
}

Clopen Clopen::cylinder(const BitWord& word) {
  check_level(word.size());
  const auto level = static_cast<unsigned>(word.size());
  Mask m(words_at(level));
  m.set(word.index());
  return from_mask(level, std::move(m));
}

Clopen Clopen::from_mask(unsigned level, Mask mask) {
  check_level(level);
  if (mask.size() != words_at(level)) {
    throw std::invalid_argument("clopen mask size must be 2^level");
  }
  while (level > 0 && reducible(mask)) {
    Mask half(mask.size() / 2);
    for (std::size_t i = 0; i < half.size(); ++i) half[i] = mask[2 * i];
    mask = std::move(half);
    --level;
  }
  if (level == 0 && mask.none()) return Clopen();
  return Clopen(level, std::move(mask));
}

std::vector<BitWord> Clopen::words() const {
  std::vector<BitWord> out;
  out.reserve(mask_.count());
  for (auto i = mask_.find_first(); i != Mask::npos; i = mask_.find_next(i)) {
    out.push_back(BitWord::from_index(level_, i));
  }
  return out;
}

Mask Clopen::mask_at(unsigned level) const {
  if (level < level_) throw std::invalid_argument("cannot coarsen a canonical clopen set");
  if (level == level_) return mask_;
  check_level(level);
  const unsigned d = level - level_;
  const std::size_t block = std::size_t{1} << d;
  Mask out(words_at(level));
  for (auto i = mask_.find_first(); i != Mask::npos; i = mask_.find_next(i)) {
    out.set(i * block, block, true);
  }
  return out;
}

bool Clopen::contains_cylinder(const BitWord& word) const {
  if (word.size() >= level_) return mask_.test(word.prefix(level_).index());
  const std::size_t d = level_ - word.size();
  const std::size_t start = word.index() << d;
  for (std::size_t i = start; i < start + (std::size_t{1} << d); ++i) {
    if (!mask_.test(i)) return false;
  }
  return true;
}

bool Clopen::meets_cylinder(const BitWord& word) const {
  if (word.size() >= level_) return mask_.test(word.prefix(level_).index());
  const std::size_t d = level_ - word.size();
  const std::size_t start = word.index() << d;
  const auto next = start == 0 ? mask_.find_first() : mask_.find_next(start - 1);
  return next != Mask::npos && next < start + (std::size_t{1} << d);
}

Clopen canonicalize(unsigned level, std::span<const BitWord> words) {
  check_level(level);
  Mask m(words_at(level));
  for (const auto& w : words) {
    if (w.size() != level) throw std::invalid_argument("word length differs from level");
    m.set(w.index());
  }
  return Clopen::from_mask(level, std::move(m));
}

Dyadic measure(const Clopen& c) { return {Nat(c.word_count()), c.level()}; }

Clopen unite(const Clopen& a, const Clopen& b) {
  const unsigned level = std::max(a.level(), b.level());
  return Clopen::from_mask(level, a.mask_at(level) | b.mask_at(level));
}

Clopen intersect(const Clopen& a, const Clopen& b) {
  const unsigned level = std::max(a.level(), b.level());
  return Clopen::from_mask(level, a.mask_at(level) & b.mask_at(level));
}

Clopen complement(const Clopen& a) { return Clopen::from_mask(a.level(), ~a.mask()); }

bool subset(const Clopen& a, const Clopen& b) {
  const unsigned level = std::max(a.level(), b.level());
  return a.mask_at(level).is_subset_of(b.mask_at(level));
}

bool disjoint(const Clopen& a, const Clopen& b) {
  const unsigned level = std::max(a.level(), b.level());
  return !a.mask_at(level).intersects(b.mask_at(level));
}

// --- coding ------------------------------------------------------------------

Nat pair(const Nat& m, const Nat& n) {
  const Nat s = m + n;
  return s * (s + 1) / 2 + n;
}

std::pair<Nat, Nat> unpair(const Nat& k) {
  const Nat w = (boost::multiprecision::sqrt(Nat(8) * k + 1) - 1) / 2;
  const Nat n = k - w * (w + 1) / 2;
  return {w - n, n};
}

std::size_t pair_index(std::size_t m, std::size_t n) {
  const auto value = to_size(pair(Nat(m), Nat(n)));
  if (!value) throw Error(ErrorKind::IndexOutOfRange, "pair index overflows size_t");
  return *value;
}

Nat seq_code(std::span<const Nat> seq) {
  Nat code = 0;
  for (const auto& a : seq) code = pair(code, a) + 1;
  return code;
}

std::vector<Nat> seq_decode(const Nat& code) {
  std::vector<Nat> reversed;
  Nat k = code;
  while (k != 0) {
    auto [prev, last] = unpair(k - 1);
    reversed.push_back(std::move(last));
    k = std::move(prev);
  }
  return {reversed.rbegin(), reversed.rend()};
}

const Nat& matrix_entry(const BairePrefix& f, std::size_t n, std::size_t k) {
  const Nat index = pair(Nat(n), Nat(k));
  if (index >= f.size()) throw_insufficient_prefix(index + 1, "matrix entry");
  return f[index.convert_to<std::size_t>()];
}

std::size_t matrix_row_length(const BairePrefix& f, std::size_t row) {
  std::size_t cols = 0;
  while (pair(Nat(row), Nat(cols)) < f.size()) ++cols;
  return cols;
}

BairePrefix matrix_row(const BairePrefix& f, std::size_t row) {
  std::vector<Nat> out;
  for (std::size_t c = 0;; ++c) {
    const Nat index = pair(Nat(row), Nat(c));
    if (index >= f.size()) break;
    out.push_back(f[index.convert_to<std::size_t>()]);
  }
  return BairePrefix(std::move(out));
}

BairePrefix matrix_pack(std::span<const BairePrefix> rows) {
  std::size_t length = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].empty()) length = std::max(length, pair_index(r, rows[r].size() - 1) + 1);
  }
  std::vector<Nat> cells(length, Nat(0));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) cells[pair_index(r, c)] = rows[r][c];
  }
  return BairePrefix(std::move(cells));
}

}  // namespace idealis
