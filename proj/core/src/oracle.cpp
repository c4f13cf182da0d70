#include "idealis/oracle.hpp"

#include <bit>

namespace idealis::oracle {

std::vector<std::uint64_t> canonical_masks(unsigned level) {
  const std::size_t words = std::size_t{1} << level;
  const std::uint64_t total = std::uint64_t{1} << words;
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < total; ++m) {
    bool split = level == 0;
    for (std::size_t i = 0; i + 1 < words && !split; i += 2) {
      split = ((m >> i) & 1) != ((m >> (i + 1)) & 1);
    }
    if (split) out.push_back(m);
  }
  return out;
}

bool contains_word(const Clopen& c, const BitWord& w) {
  for (const auto& u : c.words()) {
    if (u.is_prefix_of(w)) return true;
  }
  return false;
}

std::vector<bool> truncation(const Clopen& c, unsigned level) {
  std::vector<bool> out(std::size_t{1} << level);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = contains_word(c, BitWord::from_index(level, i));
  return out;
}

bool meets(const Clopen& c, const BitWord& w) {
  for (const auto& u : c.words()) {
    if (u.is_prefix_of(w) || w.is_prefix_of(u)) return true;
  }
  return false;
}

namespace {

void extend(std::size_t N, std::size_t t, std::size_t from, std::vector<std::size_t>& cur,
            std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == t) {
    out.push_back(cur);
    return;
  }
  for (std::size_t c = from; c < N; ++c) {
    cur.push_back(c);
    extend(N, t, c + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> subsets_lex(std::size_t N, std::size_t t) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  extend(N, t, 0, cur, out);
  return out;
}

Blocks blocks_of(const std::vector<unsigned>& y) {
  // I_0 = [0, y(0)+1), I_n = [a_{n-1}, a_{n-1} + y(n) + 1)
  Blocks blocks;
  std::size_t a = 0;
  for (unsigned w : y) {
    blocks.emplace_back(a, a + w + 1);
    a += w + 1;
  }
  return blocks;
}

std::optional<Tri> fxp(std::uint32_t x, std::uint32_t z, std::size_t len, const Blocks& blocks,
                       std::size_t from_block) {
  if (from_block >= blocks.size() || blocks[from_block].second > len) return std::nullopt;
  const std::uint32_t diff = x ^ z;
  bool every_block_seen = true;
  for (std::size_t n = from_block; n < blocks.size(); ++n) {
    const auto [lo, hi] = blocks[n];
    if (hi > len) {
      every_block_seen = false;
      continue;
    }
    const std::uint32_t block_mask = ((std::uint32_t{1} << (hi - lo)) - 1) << lo;
    if ((diff & block_mask) == 0) return Tri::FailsAtStage;
  }
  return every_block_seen ? Tri::HoldsAtStage : Tri::InsufficientData;
}

std::size_t laver(const baire::PhiMap& phi, const std::vector<Nat>& f, std::size_t n0, std::size_t n1) {
  std::size_t count = 0;
  for (std::size_t n = n0; n < n1; ++n) {
    const std::vector<Nat> stem(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(n));
    const auto it = phi.find(stem);
    const Nat bound = it == phi.end() ? Nat(0) : it->second;
    if (f[n] < bound) ++count;
  }
  return count;
}

}  // namespace idealis::oracle
