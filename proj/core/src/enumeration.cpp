#include "idealis/enumeration.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <queue>
#include <string>

namespace idealis::enumeration {

Nat binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Nat value = 1;
  for (std::size_t i = 0; i < k; ++i) {
    value *= n - i;
    value /= i + 1;
  }
  return value;
}

Nat partial_binomial_sum(std::size_t j, std::size_t b) {
  if (b == 0) return 0;
  if (b > j) return Nat(1) << j;

  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::size_t>, Nat> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({j, b}); it != cache.end()) return it->second;
  }

  Nat sum = 0;
  if (b <= j / 2 + 1) {
    Nat term = 1;  // C(j, c)
    for (std::size_t c = 0; c < b; ++c) {
      sum += term;
      term *= j - c;
      term /= c + 1;
    }
  } else {
    // 2^j minus the upper tail Σ_{c >= b} C(j, c).
    Nat term = 1;  // C(j, c) for c = j
    Nat tail = 0;
    for (std::size_t c = j; c >= b; --c) {
      tail += term;
      term *= c;
      term /= j - c + 1;
    }
    sum = (Nat(1) << j) - tail;
  }

  std::lock_guard lock(mutex);
  if (cache.size() > 200000) cache.clear();
  cache.emplace(std::make_pair(j, b), sum);
  return sum;
}

namespace {

// Admissible masks at a level have popcount < threshold. Canonical masks are
// the admissible ones that are not refinements (lifts) of a coarser mask;
// a lift has equal bits in every pair {2i, 2i+1}.
struct LevelShape {
  unsigned level;
  std::size_t threshold;
};

LevelShape shape_for(unsigned n, unsigned level) {
  return {level, level >= n ? std::size_t{1} << (level - n) : std::size_t{1}};
}

std::size_t ceil_half(std::size_t x) { return (x + 1) / 2; }

// `ones` lists the set positions >= p in descending order; every other
// position >= p is 0 and positions below p are free. Returns how many
// canonical admissible masks complete this prefix.
Nat canonical_completions(const LevelShape& shape, std::span<const std::size_t> ones, std::size_t p) {
  const std::size_t q = ones.size();
  if (q >= shape.threshold) return 0;
  Nat count = partial_binomial_sum(p, shape.threshold - q);

  bool compatible = true;
  bool forced_low = false;
  for (std::size_t s : ones) {
    const std::size_t partner = s ^ 1U;
    if (partner < p) {
      forced_low = true;  // s == p with p odd; the low bit p - 1 must follow
      continue;
    }
    if (!std::binary_search(ones.begin(), ones.end(), partner, std::greater<>())) {
      compatible = false;
      break;
    }
  }
  if (compatible) {
    const std::size_t fixed = q + (forced_low ? 1 : 0);
    if (fixed < shape.threshold) {
      count -= partial_binomial_sum(p / 2, ceil_half(shape.threshold - fixed));
    }
  }
  return count;
}

Nat rank_in_level(const LevelShape& shape, const Mask& mask) {
  std::vector<std::size_t> ones;
  for (auto i = mask.find_first(); i != Mask::npos; i = mask.find_next(i)) ones.push_back(i);
  std::reverse(ones.begin(), ones.end());

  Nat rank = 0;
  for (std::size_t idx = 0; idx < ones.size(); ++idx) {
    rank += canonical_completions(shape, std::span(ones).first(idx), ones[idx]);
  }
  return rank;
}

Mask unrank_in_level(const LevelShape& shape, Nat r) {
  std::vector<std::size_t> ones;
  std::size_t cur = std::size_t{1} << shape.level;
  for (;;) {
    if (r == 0 && canonical_completions(shape, ones, 0) == 1) break;
    // Largest p < cur with completions(p) <= r; completions grow with p.
    std::size_t lo = 0;
    std::size_t hi = cur - 1;
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo + 1) / 2;
      if (canonical_completions(shape, ones, mid) <= r) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    r -= canonical_completions(shape, ones, lo);
    ones.push_back(lo);
    cur = lo;
  }
  Mask mask(std::size_t{1} << shape.level);
  for (std::size_t s : ones) mask.set(s);
  return mask;
}

}  // namespace

Nat clopen_level_count(unsigned n, unsigned level) {
  if (level == 0) return 0;
  const auto shape = shape_for(n, level);
  return canonical_completions(shape, {}, std::size_t{1} << level);
}

Clopen clopen_enum(unsigned n, const Nat& k) {
  if (k == 0) return Clopen::empty();
  Nat r = k - 1;
  for (unsigned level = 1;; ++level) {
    check_level(level);
    const Nat count = clopen_level_count(n, level);
    if (r < count) return Clopen::from_mask(level, unrank_in_level(shape_for(n, level), r));
    r -= count;
  }
}

Nat clopen_rank(unsigned n, const Clopen& c) {
  if (c.is_empty()) return 0;
  if (measure(c) >= Dyadic::pow2_neg(n)) {
    throw Error(ErrorKind::MeasureTooLarge,
                "clopen set of measure " + measure(c).str() + " is not below 2^-" + std::to_string(n));
  }
  Nat k = 1;
  for (unsigned level = 1; level < c.level(); ++level) k += clopen_level_count(n, level);
  return k + rank_in_level(shape_for(n, c.level()), c.mask());
}

// --- basic open sets -----------------------------------------------------------

std::optional<BitWord> cantor_basic_word(const Nat& index) {
  if (index == 0) return std::nullopt;
  const std::size_t length = boost::multiprecision::msb(index);
  check_level(length);
  const Nat offset = index - (Nat(1) << length);
  return BitWord::from_index(length, offset.convert_to<std::uint64_t>());
}

Nat cantor_basic_index(const BitWord& word) {
  return (Nat(1) << word.size()) + Nat(word.index());
}

Clopen basic_open_cantor(const Nat& index) {
  auto word = cantor_basic_word(index);
  return word ? Clopen::cylinder(*word) : Clopen::empty();
}

std::optional<BairePrefix> basic_open_baire(const Nat& index) {
  if (index == 0) return std::nullopt;
  return BairePrefix(seq_decode(index - 1));
}

Nat baire_basic_index(const BairePrefix& stem) { return seq_code(stem.entries()) + 1; }

namespace {

Nat kprime_baire(const Nat& n, const Nat& m) {
  // Extensions of the stem in increasing code order: a min-heap where each
  // popped node contributes its first child and its next sibling.
  struct Node {
    Nat code;
    Nat parent;
    Nat last;
    bool root;
  };
  auto cmp = [](const Node& a, const Node& b) { return a.code > b.code; };
  std::priority_queue<Node, std::vector<Node>, decltype(cmp)> heap(cmp);
  heap.push({n - 1, 0, 0, true});
  for (Nat popped = 0;; ++popped) {
    Node node = heap.top();
    heap.pop();
    if (popped == m) return node.code + 1;
    heap.push({pair(node.code, 0) + 1, node.code, 0, false});
    if (!node.root) heap.push({pair(node.parent, node.last + 1) + 1, node.parent, node.last + 1, false});
  }
}

}  // namespace

Nat kprime(const Nat& n, const Nat& m, BaseSpace space) {
  if (n == 0) return 0;
  if (space == BaseSpace::Baire) return kprime_baire(n, m);
  // Subcylinders of U_n at depth d are indices n*2^d + j, j < 2^d.
  const std::size_t d = boost::multiprecision::msb(Nat(m + 1));
  return (n << d) + (m + 1 - (Nat(1) << d));
}

BitWord lex_word(std::size_t n, const Nat& k) {
  if (n > 63 || k < 0 || k >= (Nat(1) << n)) {
    throw Error(ErrorKind::IndexOutOfRange,
                "lex_word index " + k.str() + " out of range for length " + std::to_string(n), k);
  }
  return BitWord::from_index(n, k.convert_to<std::uint64_t>());
}

// --- combinadics -------------------------------------------------------------------

std::vector<std::size_t> kcomb_unrank(std::size_t N, std::size_t t, const Nat& r) {
  if (t > N) throw Error(ErrorKind::IndexOutOfRange, "subset size exceeds ground set", Nat(t));
  if (r < 0 || r >= binomial(N, t)) {
    throw Error(ErrorKind::IndexOutOfRange, "combination rank " + r.str() + " out of range", r);
  }
  std::vector<std::size_t> out;
  out.reserve(t);
  if (t == 0) return out;

  // b = C(rest, need - 1): subsets that take element c next, where rest is
  // the number of elements after c.
  Nat remaining = r;
  std::size_t need = t;
  std::size_t rest = N - 1;
  Nat b = binomial(rest, need - 1);
  for (std::size_t c = 0; need > 0; ++c, --rest) {
    if (remaining < b) {
      out.push_back(c);
      if (--need == 0) break;
      b = b * need / rest;  // C(rest - 1, need - 1) from C(rest, need)
    } else {
      remaining -= b;
      b = b * (rest - (need - 1)) / rest;  // C(rest - 1, need - 1)
    }
  }
  return out;
}

Nat kcomb_rank(std::size_t N, std::span<const std::size_t> subset) {
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] >= N || (i > 0 && subset[i] <= subset[i - 1])) {
      throw Error(ErrorKind::IndexOutOfRange, "subset must be strictly increasing and below N",
                  Nat(subset[i]));
    }
  }
  Nat rank = 0;
  std::size_t need = subset.size();
  if (need == 0) return rank;
  std::size_t rest = N - 1;
  Nat b = binomial(rest, need - 1);
  std::size_t next = 0;
  for (std::size_t c = 0; need > 0; ++c, --rest) {
    if (subset[next] == c) {
      ++next;
      if (--need == 0) break;
      b = b * need / rest;
    } else {
      rank += b;
      b = b * (rest - (need - 1)) / rest;
    }
  }
  return rank;
}

}  // namespace idealis::enumeration
