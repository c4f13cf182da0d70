#include "idealis/suites.hpp"

#include "idealis/enumeration.hpp"
#include "idealis/oracle.hpp"
#include "suite_support.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

namespace idealis::verify {

namespace detail {

Gen::Gen(std::uint64_t seed, std::string_view tag, std::uint64_t index) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  rng_.seed(seq);
}

BitWord Gen::word(std::size_t length) {
  BitWord w;
  for (std::size_t i = 0; i < length; ++i) w.push_back(coin());
  return w;
}

Clopen Gen::clopen(unsigned level, double p) {
  Mask m(std::size_t{1} << level);
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = coin(p);
  return Clopen::from_mask(level, std::move(m));
}

std::string show(const Clopen& c) {
  std::string s = cat("{level ", c.level(), ":");
  for (const auto& w : c.words()) s += " " + w.str();
  return s + "}";
}

namespace {

namespace en = enumeration;

Clopen from_bits(unsigned level, std::uint64_t bits) {
  std::vector<BitWord> words;
  for (std::size_t i = 0; i < (std::size_t{1} << level); ++i) {
    if ((bits >> i) & 1) words.push_back(BitWord::from_index(level, i));
  }
  return canonicalize(level, words);
}

}  // namespace

SuiteReport suite_space_algebra(std::uint64_t seed) {
  SuiteReport r{"space-algebra", {}, 0};
  auto& canon = r.add("canonical form is unique under refinement");
  auto& additive = r.add("measure is additive");
  auto& demorgan = r.add("complement and De Morgan");
  auto& inclusion = r.add("subset agrees with truncation inclusion");
  auto& cylinders = r.add("cylinder queries agree with word scan");
  for (std::uint64_t i = 0; i < 300; ++i) {
    Gen g(seed, "space", i);
    const Clopen a = g.clopen(static_cast<unsigned>(g.below(8)), 0.1 + 0.8 * g.coin());
    const Clopen b = g.clopen(static_cast<unsigned>(g.below(8)), g.coin(0.5) ? 0.3 : 0.7);
    const unsigned up = a.level() + static_cast<unsigned>(g.below(3));
    canon.check(Clopen::from_mask(up, a.mask_at(up)) == a, [&] { return show(a); });
    additive.check(measure(unite(a, b)) + measure(intersect(a, b)) == measure(a) + measure(b),
                   [&] { return show(a) + " " + show(b); });
    demorgan.check(measure(complement(a)) == Dyadic::one() - measure(a) &&
                       complement(unite(a, b)) == intersect(complement(a), complement(b)) &&
                       disjoint(a, complement(a)),
                   [&] { return show(a) + " " + show(b); });
    const auto ta = oracle::truncation(a, 8);
    const auto tb = oracle::truncation(b, 8);
    bool included = true;
    for (std::size_t k = 0; k < ta.size(); ++k) included = included && (!ta[k] || tb[k]);
    inclusion.check(subset(a, b) == included, [&] { return show(a) + " " + show(b); });
    for (int q = 0; q < 4; ++q) {
      const BitWord w = g.word(g.below(11));
      cylinders.check(a.meets_cylinder(w) == oracle::meets(a, w) &&
                          (w.size() < a.level() || a.contains_cylinder(w) == oracle::contains_word(a, w)),
                      [&] { return show(a) + " " + w.str(); });
    }
  }
  return r;
}

SuiteReport suite_seq_coding(std::uint64_t seed) {
  SuiteReport r{"seq-coding", {}, 0};
  auto& pairing = r.add("unpair inverts pair");
  auto& closed = r.add("pair matches (m+n)(m+n+1)/2+n");
  auto& seqs = r.add("seq_decode inverts seq_code");
  auto& matrix = r.add("matrix_entry is direct indexing");
  for (int m = 0; m < 100; ++m) {
    for (int n = 0; n < 100; ++n) {
      const auto [a, b] = unpair(pair(m, n));
      pairing.check(a == m && b == n, [&] { return cat("pair(", m, ",", n, ")"); });
      closed.check(pair(m, n) == (m + n) * (m + n + 1) / 2 + n, [&] { return cat(m, ",", n); });
    }
  }
  for (std::uint64_t i = 0; i < 200; ++i) {
    Gen g(seed, "pair", i);
    const Nat m = Nat(g.below(1ULL << 62)) * Nat(g.below(1ULL << 62));
    const Nat n = Nat(g.below(1ULL << 62));
    const auto [a, b] = unpair(pair(m, n));
    pairing.check(a == m && b == n, [&] { return cat("pair(", m, ",", n, ")"); });
  }
  for (int k = 0; k < 5000; ++k) {
    seqs.check(seq_code(seq_decode(k)) == k, [&] { return cat("code ", k); });
  }
  for (std::uint64_t i = 0; i < 200; ++i) {
    Gen g(seed, "seq", i);
    std::vector<Nat> s(g.below(6));
    for (auto& v : s) v = g.below(g.coin() ? 4 : 1000);
    seqs.check(seq_decode(seq_code(s)) == s, [&] { return cat("length ", s.size()); });
  }
  std::vector<Nat> cells;
  for (int i = 0; i < 300; ++i) cells.push_back(i * 7 + 1);
  const BairePrefix f(cells);
  for (std::size_t n = 0; n < 24; ++n) {
    for (std::size_t k = 0; k < 24; ++k) {
      const std::size_t i = (n + k) * (n + k + 1) / 2 + k;
      if (i >= f.size()) continue;
      matrix.check(matrix_entry(f, n, k) == f[i], [&] { return cat(n, ",", k); });
    }
  }
  return r;
}

SuiteReport suite_enum_bijection(std::uint64_t) {
  SuiteReport r{"enum-bijection", {}, 0};
  auto& canonical = r.add("canonicalize keeps the least level");
  auto& inverse = r.add("clopen_enum inverts clopen_rank");
  auto& exact = r.add("ranks of small sets are exactly 0..count-1");
  auto& counts = r.add("clopen_level_count matches brute force");
  auto& huge = r.add("clopen_rank rejects measure >= 2^-n");
  for (unsigned n = 0; n <= 3; ++n) {
    std::vector<Nat> ranks;
    for (unsigned level = 0; level <= 4; ++level) {
      std::size_t admissible = 0;
      for (std::uint64_t bits : oracle::canonical_masks(level)) {
        const Clopen c = from_bits(level, bits);
        canonical.check(c.level() == level || (level == 0 && c.is_empty()), [&] { return show(c); });
        const int ones = std::popcount(bits);
        // measure ones/2^level < 2^-n
        if ((Nat(ones) << n) >= (Nat(1) << level)) {
          if (n == 3 && level == 4 && ones > 2) {
            bool threw = false;
            try {
              (void)en::clopen_rank(n, c);
            } catch (const Error& e) {
              threw = e.kind() == ErrorKind::MeasureTooLarge;
            }
            huge.check(threw, [&] { return show(c); });
          }
          continue;
        }
        ++admissible;
        const Nat k = en::clopen_rank(n, c);
        ranks.push_back(k);
        inverse.check(en::clopen_enum(n, k) == c, [&] { return cat("n=", n, " ", show(c)); });
      }
      if (level > 0) {
        counts.check(en::clopen_level_count(n, level) == admissible,
                     [&] { return cat("n=", n, " level=", level, " expected ", admissible); });
      }
    }
    std::sort(ranks.begin(), ranks.end());
    bool contiguous = true;
    for (std::size_t i = 0; i < ranks.size(); ++i) contiguous = contiguous && ranks[i] == i;
    exact.check(contiguous, [&] { return cat("n=", n, ": ranks are not a permutation of 0..", ranks.size() - 1); });
  }
  return r;
}

SuiteReport suite_kprime(std::uint64_t) {
  SuiteReport r{"kprime", {}, 0};
  auto& cantor = r.add("Cantor kprime lists nonempty basic subsets in order");
  auto& baire = r.add("Baire kprime lists nonempty basic subsets in order");
  auto& zero = r.add("kprime(0, m) = 0");
  for (int m = 0; m < 20; ++m) {
    zero.check(en::kprime(0, m, en::BaseSpace::Cantor) == 0 && en::kprime(0, m, en::BaseSpace::Baire) == 0,
               [&] { return cat("m=", m); });
  }
  for (int n = 1; n < 64; ++n) {
    const BitWord stem = *en::cantor_basic_word(n);
    std::vector<int> expected;
    for (int i = 1; i < (1 << 13) && expected.size() < 40; ++i) {
      if (stem.is_prefix_of(*en::cantor_basic_word(i))) expected.push_back(i);
    }
    for (std::size_t m = 0; m < expected.size(); ++m) {
      cantor.check(en::kprime(n, m, en::BaseSpace::Cantor) == expected[m], [&] { return cat(n, ",", m); });
    }
  }
  std::vector<std::vector<Nat>> stems;
  for (int i = 1; i < 6000; ++i) stems.push_back(en::basic_open_baire(i)->entries());
  for (int n = 1; n < 40; ++n) {
    const auto& stem = stems[n - 1];
    std::vector<int> expected;
    for (int i = 1; i < 6000 && expected.size() < 16; ++i) {
      const auto& s = stems[i - 1];
      if (s.size() >= stem.size() && std::equal(stem.begin(), stem.end(), s.begin())) expected.push_back(i);
    }
    for (std::size_t m = 0; m < expected.size(); ++m) {
      baire.check(en::kprime(n, m, en::BaseSpace::Baire) == expected[m], [&] { return cat(n, ",", m); });
    }
  }
  return r;
}

SuiteReport suite_kcomb(std::uint64_t) {
  SuiteReport r{"kcomb", {}, 0};
  auto& inverse = r.add("kcomb_rank inverts kcomb_unrank for N <= 16");
  auto& order = r.add("kcomb_unrank matches lexicographic brute force for N <= 10");
  auto& range = r.add("kcomb_unrank rejects r >= C(N, t)");
  for (std::size_t N = 0; N <= 16; ++N) {
    for (std::size_t t = 0; t <= N; ++t) {
      const Nat total = en::binomial(N, t);
      std::vector<std::vector<std::size_t>> brute;
      if (N <= 10) brute = oracle::subsets_lex(N, t);
      for (Nat k = 0; k < total; ++k) {
        const auto s = en::kcomb_unrank(N, t, k);
        inverse.check(en::kcomb_rank(N, s) == k, [&] { return cat("N=", N, " t=", t, " r=", k); });
        if (N <= 10) {
          order.check(s == brute[k.convert_to<std::size_t>()], [&] { return cat("N=", N, " t=", t, " r=", k); });
        }
      }
      bool threw = false;
      try {
        (void)en::kcomb_unrank(N, t, total);
      } catch (const Error& e) {
        threw = e.kind() == ErrorKind::IndexOutOfRange;
      }
      range.check(threw, [&] { return cat("N=", N, " t=", t); });
    }
  }
  return r;
}

}  // namespace detail

bool SuiteReport::ok() const {
  return std::all_of(properties.begin(), properties.end(), [](const Property& p) { return p.ok(); });
}

Property& SuiteReport::add(std::string name) {
  properties.push_back({std::move(name), 0, 0, {}});
  return properties.back();
}

namespace {

using SuiteFn = SuiteReport (*)(std::uint64_t);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  using namespace detail;
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"space-algebra", suite_space_algebra},   {"seq-coding", suite_seq_coding},
      {"enum-bijection", suite_enum_bijection}, {"kprime", suite_kprime},
      {"kcomb", suite_kcomb},                   {"countable", suite_countable},
      {"meager-density", suite_meager_density}, {"fxp-oracle", suite_fxp_oracle},
      {"null-guard", suite_null_guard},         {"null-encoder", suite_null_encoder},
      {"e-fullness", suite_e_fullness},         {"ksigma-diagonal", suite_ksigma_diagonal},
      {"laver-oracle", suite_laver_oracle},     {"tri-monotone", suite_tri_monotone},
      {"fubini-table", suite_fubini_table},
  };
  return suites;
}

SuiteReport timed(SuiteFn fn, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport r;
  try {
    r = fn(seed);
  } catch (const std::exception& e) {
    // An escaped exception is a failed property, not a crash of the run.
    r.add("suite ran to completion").check(false, [&] { return std::string(e.what()); });
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<SuiteReport> run_check(std::string_view suite, std::uint64_t seed) {
  std::vector<SuiteReport> out;
  for (const auto& [name, fn] : registry()) {
    if (suite == "all" || suite == name) {
      out.push_back(timed(fn, seed));
      if (out.back().suite.empty()) out.back().suite = name;
    }
  }
  if (out.empty()) throw Error(ErrorKind::UnknownSuite, "unknown suite '" + std::string(suite) + "'");
  return out;
}

std::vector<Criterion> run_criteria(std::uint64_t seed, const std::function<void(const Criterion&)>& on_done) {
  using detail::cat;
  struct Entry {
    int id;
    const char* title;
    std::vector<std::string> suites;
    double time_limit;  // seconds; 0 = none
    std::function<SuiteReport()> custom{};  // replaces `suites` when set
  };
  const std::vector<Entry> entries{
      {1, "null guard: measure(null_stage) < 2^-n for 200 prefixes, n <= 8, K <= 64", {"null-guard"}, 10.0},
      {2, "null encoder laws on 50 cover families (tail, block, guard identity, coverage)", {"null-encoder"}, 0},
      {3, "clopen enumeration is a bijection onto canonical sets of level <= 4, n <= 3", {"enum-bijection"}, 0},
      {4, "dense sections meet every U_n (n <= 10); encoder stage is inside W", {"meager-density"}, 0},
      {5, "fxp_eval matches the block formula exhaustively (|x| = |z| <= 12, |y| <= 3)", {}, 0,
       [] {
         const auto start = std::chrono::steady_clock::now();
         SuiteReport r = detail::fxp_oracle_report(12);
         r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
         return r;
       }},
      {6, "E stages have measure >= 1 - 2^-n_max; term sizes; encoder subset law", {"e-fullness"}, 0},
      {7, "K_sigma diagonal escapes every bound; encoder dominates its inputs", {"ksigma-diagonal"}, 0},
      {8, "laver_witnesses matches brute force (length <= 6, entries < 4, 50 maps)", {"laver-oracle"}, 0},
      {9, "kcomb_rank inverts kcomb_unrank for all N <= 16", {"kcomb"}, 0},
      {10, "no evaluator flips Holds/Fails under refinement; Kleene table", {"tri-monotone", "fubini-table"}, 0},
  };
  std::vector<Criterion> out;
  for (const auto& entry : entries) {
    Criterion c{entry.id, entry.title, true, {}, 0};
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<SuiteReport> reports;
    if (entry.custom) reports.push_back(entry.custom());
    for (const auto& name : entry.suites) {
      for (auto& report : run_check(name, seed)) reports.push_back(std::move(report));
    }
    for (const auto& report : reports) {
      c.seconds += report.seconds;
      for (const auto& p : report.properties) {
        passed += p.passed;
        failed += p.failed;
        if (!p.ok() && c.detail.empty()) {
          c.detail = p.name + ": " + (p.failed ? p.first_failure : std::string("no cases ran"));
        }
        c.pass = c.pass && p.ok();
      }
    }
    if (entry.time_limit > 0 && c.seconds >= entry.time_limit) {
      c.pass = false;
      c.detail = cat("runtime ", c.seconds, " s exceeds ", entry.time_limit, " s");
    }
    if (c.detail.empty()) c.detail = cat(passed, " checks passed");
    else c.detail = cat(failed, " of ", passed + failed, " checks failed; ", c.detail);
    if (on_done) on_done(c);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace idealis::verify
