// Suites for the countable, meager and null constructions.

#include "idealis/countable.hpp"
#include "idealis/enumeration.hpp"
#include "idealis/meager.hpp"
#include "idealis/null.hpp"
#include "idealis/oracle.hpp"
#include "suite_support.hpp"

#include <algorithm>

namespace idealis::verify::detail {

namespace {

namespace en = enumeration;

template <class F>
std::optional<ErrorKind> error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

BairePrefix random_baire(Gen& g, std::size_t length, std::uint64_t bound) {
  BairePrefix p;
  for (std::size_t i = 0; i < length; ++i) p.push_back(g.below(bound));
  return p;
}

}  // namespace

SuiteReport suite_countable(std::uint64_t seed) {
  SuiteReport r{"countable", {}, 0};
  auto& round = r.add("every encoded point is HoldsAtStage");
  auto& agree = r.add("countable_member agrees with direct row comparison");
  auto& empty = r.add("empty list gives FailsAtStage");
  auto& short_point = r.add("depth beyond the point raises InsufficientPrefix");
  for (std::uint64_t i = 0; i < 300; ++i) {
    Gen g(seed, "countable", i);
    const std::size_t depth = g.between(1, 6);
    std::vector<BairePrefix> points(g.between(1, 5));
    for (auto& p : points) p = random_baire(g, depth + g.below(3), 3);
    const auto y = countable::countable_encode(points, depth);
    for (const auto& p : points) {
      round.check(countable::countable_member(y, p, points.size(), depth) == Tri::HoldsAtStage,
                  [&] { return cat("case ", i); });
    }
    for (int q = 0; q < 6; ++q) {
      BairePrefix x = g.coin() ? points[g.below(points.size())] : random_baire(g, depth + 2, 3);
      x = x.prefix(g.below(x.size() + 1));
      const std::size_t d = g.below(std::min(x.size(), depth) + 1);
      bool all_differ = true;
      bool certified = false;
      for (const auto& p : points) {
        bool differs = false;
        for (std::size_t c = 0; c < d; ++c) differs = differs || p[c] != x[c];
        all_differ = all_differ && differs;
        if (x.size() >= depth) {
          bool same = true;
          for (std::size_t c = 0; c < depth; ++c) same = same && p[c] == x[c];
          certified = certified || same;
        }
      }
      const Tri expected = all_differ ? Tri::FailsAtStage : certified ? Tri::HoldsAtStage : Tri::InsufficientData;
      agree.check(countable::countable_member(y, x, points.size(), d) == expected,
                  [&] { return cat("case ", i, " query ", q); });
    }
    short_point.check(error_of([&] { (void)countable::countable_member(y, BairePrefix{}, 1, 1); }) ==
                          ErrorKind::InsufficientPrefix,
                      [&] { return cat("case ", i); });
  }
  const auto none = countable::countable_encode({}, 3);
  empty.check(countable::countable_member(none, BairePrefix{0, 0, 0}, 0, 3) == Tri::FailsAtStage,
              [] { return std::string("rows=0"); });
  return r;
}

SuiteReport suite_meager_density(std::uint64_t seed) {
  SuiteReport r{"meager-density", {}, 0};
  auto& dense = r.add("every parameter's stage meets U_n for 1 <= n <= 10");
  auto& terms = r.add("each stage term is a nonempty basic subset of U_n");
  auto& monotone = r.add("stage grows with n_max");
  auto& encoder = r.add("encoder stage is inside W (truncation inclusion)");
  auto& not_dense = r.add("non-dense W raises NotDense at a disjoint U_n");
  auto& section = r.add("points outside an encoded stage are in the meager section");
  auto& vacuous = r.add("rows = 0 gives FailsAtStage");

  for (std::uint64_t i = 0; i < 100; ++i) {
    Gen g(seed, "meager-param", i);
    meager::DenseOpenParam x{g.coin(0.2) ? BairePrefix(std::vector<Nat>(11, Nat(0))) : random_baire(g, 11, 128)};
    const Clopen stage = meager::dense_section_stage(x, 10);
    Clopen previous;
    for (std::size_t n = 1; n <= 10; ++n) {
      const Clopen U = en::basic_open_cantor(n);
      dense.check(!intersect(stage, U).is_empty(), [&] { return cat("param ", i, " misses U_", n); });
      const Clopen term = en::basic_open_cantor(en::kprime(n, x.prefix[n], en::BaseSpace::Cantor));
      terms.check(!term.is_empty() && subset(term, U), [&] { return cat("param ", i, " n=", n); });
      const Clopen s = meager::dense_section_stage(x, n);
      monotone.check(subset(previous, s), [&] { return cat("param ", i, " n_max=", n); });
      previous = s;
    }
  }

  for (std::uint64_t i = 0; i < 50; ++i) {
    Gen g(seed, "meager-W", i);
    const unsigned level = static_cast<unsigned>(g.between(3, 8));
    Mask m(std::size_t{1} << level);
    const std::size_t spread = std::size_t{1} << (level - 3);
    for (std::size_t u = 0; u < 8; ++u) m.set(u * spread + g.below(spread));
    for (std::size_t k = 0; k < m.size(); ++k) m[k] = m[k] || g.coin(0.3);
    const Clopen W = Clopen::from_mask(level, m);
    const auto x = meager::dense_open_encode(W, 10);
    const Clopen stage = meager::dense_section_stage(x, 10);
    const auto ts = oracle::truncation(stage, 8);
    const auto tw = oracle::truncation(W, 8);
    bool inside = true;
    for (std::size_t k = 0; k < ts.size(); ++k) inside = inside && (!ts[k] || tw[k]);
    encoder.check(inside && subset(stage, W), [&] { return cat("W ", show(W)); });

    const std::vector<Clopen> rows{W};
    const auto p = meager::meager_encode(rows, 10);
    for (int q = 0; q < 8; ++q) {
      const BitWord z = g.word(8);
      if (oracle::contains_word(stage, z)) continue;
      section.check(meager::meager_eval(p, z, 1, 10) == Tri::HoldsAtStage, [&] { return show(W) + " " + z.str(); });
    }

    // Knock out one of the level-3 cylinders U_8, U_9, U_10 entirely.
    Mask holes = m;
    const std::size_t u = g.below(3);
    for (std::size_t k = 0; k < spread; ++k) holes.reset(u * spread + k);
    const Clopen sparse = Clopen::from_mask(level, holes);
    try {
      (void)meager::dense_open_encode(sparse, 10);
      not_dense.check(false, [&] { return "accepted " + show(sparse); });
    } catch (const Error& e) {
      const bool right = e.kind() == ErrorKind::NotDense && e.value() &&
                         disjoint(en::basic_open_cantor(*e.value()), sparse);
      not_dense.check(right, [&] { return "wrong error for " + show(sparse); });
    }
  }
  const auto kind = error_of([] { (void)meager::dense_open_encode(Clopen::cylinder(BitWord::parse("0")), 3); });
  not_dense.check(kind == ErrorKind::NotDense, [] { return std::string("W = [0]"); });
  const auto empty = meager::meager_encode({}, 4);
  vacuous.check(meager::meager_eval(empty, BitWord::parse("0101"), 0, 4) == Tri::FailsAtStage,
                [] { return std::string("rows=0"); });
  return r;
}

namespace {

std::vector<std::vector<unsigned>> small_partitions() {
  std::vector<std::vector<unsigned>> ys{{}};
  for (std::size_t len = 1; len <= 3; ++len) {
    std::size_t total = std::size_t{1} << (2 * len);
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<unsigned> y;
      for (std::size_t j = 0; j < len; ++j) y.push_back(static_cast<unsigned>((code >> (2 * j)) & 3));
      ys.push_back(y);
    }
  }
  return ys;
}

}  // namespace

// Word length up to which the error cases run on every pair; each one
// unwinds an exception, so full length would dominate the run.
constexpr std::size_t kErrorLen = 6;

SuiteReport fxp_oracle_report(std::size_t max_len) {
  SuiteReport r{"fxp-oracle", {}, 0};
  auto& agree = r.add(cat("fxp_eval matches the block formula, all pairs of length <= ", max_len,
                          ", all y of length <= 3 with entries < 4"));
  auto& outside = r.add(cat("stages outside the partition or the points raise InsufficientPrefix, length <= ",
                            std::min<std::size_t>(max_len, kErrorLen)));
  auto& partition = r.add("partition_from matches the interval formula");
  std::vector<std::vector<BitWord>> words(max_len + 1);
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (std::uint32_t v = 0; v < (1u << len); ++v) {
      BitWord w;
      for (std::size_t i = 0; i < len; ++i) w.push_back((v >> i) & 1);
      words[len].push_back(std::move(w));
    }
  }
  for (const auto& y : small_partitions()) {
    BairePrefix yp;
    for (unsigned v : y) yp.push_back(v);
    const auto P = meager::partition_from(yp);
    const auto blocks = oracle::blocks_of(y);
    std::size_t a = 0;
    bool formula = P.intervals.size() == y.size();
    for (std::size_t n = 0; n < y.size() && formula; ++n) {
      formula = P.intervals[n].begin == a && P.intervals[n].end == a + y[n] + 1;
      a += y[n] + 1;
    }
    partition.check(formula, [&] { return cat("y of length ", y.size()); });

    // In-domain stages: a block index inside P whose block fits the points.
    for (std::size_t from = 0; from < y.size(); ++from) {
      std::size_t mismatches = 0;
      std::string first;
      for (std::size_t len = P.intervals[from].end; len <= max_len; ++len) {
        const auto& ws = words[len];
        for (std::uint32_t xv = 0; xv < ws.size(); ++xv) {
          for (std::uint32_t zv = 0; zv < ws.size(); ++zv) {
            const Tri got = meager::fxp_eval(ws[xv], P, ws[zv], from);
            if (got != *oracle::fxp(xv, zv, len, blocks, from) && mismatches++ == 0) {
              first = cat("x=", ws[xv].str(), " z=", ws[zv].str(), " from=", from);
            }
          }
        }
      }
      agree.check(mismatches == 0, [&] { return first; });
    }
    // Out-of-domain stages must raise InsufficientPrefix whatever the points.
    for (std::size_t from = 0; from <= y.size(); ++from) {
      std::size_t mismatches = 0;
      for (std::size_t len = 0; len <= std::min<std::size_t>(max_len, kErrorLen); ++len) {
        if (from < y.size() && P.intervals[from].end <= len) continue;
        const auto& ws = words[len];
        for (std::uint32_t xv = 0; xv < ws.size(); ++xv) {
          for (std::uint32_t zv = 0; zv < ws.size(); ++zv) {
            const bool raised = error_of([&] { (void)meager::fxp_eval(ws[xv], P, ws[zv], from); }) ==
                                ErrorKind::InsufficientPrefix;
            if (!raised || oracle::fxp(xv, zv, len, blocks, from)) ++mismatches;
          }
        }
      }
      outside.check(mismatches == 0, [&] { return cat("y of length ", y.size(), " from=", from); });
    }
  }
  return r;
}

SuiteReport suite_fxp_oracle(std::uint64_t) { return fxp_oracle_report(10); }

namespace {

// Row-wise random null parameter covering cells (n, k) for n <= rows-1, k <= cols.
null::NullParam random_null(Gen& g, std::size_t rows, std::size_t cols) {
  std::vector<BairePrefix> grid(rows);
  for (std::size_t n = 0; n < rows; ++n) {
    std::vector<Nat> row(cols + 1);
    for (auto& cell : row) {
      const auto kind = g.below(10);
      if (kind < 3) {
        cell = 0;
      } else if (kind < 6) {
        cell = g.below(64);
      } else {
        // A set just under the row budget, so raw candidates overflow it.
        const unsigned level = static_cast<unsigned>(n + g.between(1, 3));
        const std::size_t words = std::size_t{1} << level;
        const std::size_t budget = words >> n;  // 2^-n in level-words
        Mask m(words);
        const std::size_t ones = g.between(budget / 2, budget - 1);
        while (m.count() < ones) m.set(g.below(words));
        cell = en::clopen_rank(static_cast<unsigned>(n), Clopen::from_mask(level, m));
      }
    }
    grid[n] = BairePrefix(std::move(row));
  }
  null::NullParam f;
  f.prefix = matrix_pack(grid);
  for (std::size_t n = 0; n < rows; ++n) f.witness.push_back(std::max(n + 1, cols));
  return f;
}

}  // namespace

SuiteReport suite_null_guard(std::uint64_t seed) {
  SuiteReport r{"null-guard", {}, 0};
  auto& bound = r.add("measure(null_stage(f, n, K)) < 2^-n");
  auto& monotone = r.add("null_stage grows with K");
  auto& guarded = r.add("some adversarial raw candidates are rejected");
  auto& zero = r.add("all-zero parameter gives empty stages");
  std::size_t rejected = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    Gen g(seed, "null-guard", i);
    const auto f = random_null(g, 9, 64);
    for (std::size_t n = 0; n <= 8; ++n) {
      const std::size_t K = g.between(n + 1, 63);
      const Clopen small = null::null_stage(f, n, K);
      const Clopen full = null::null_stage(f, n, 64);
      const Dyadic budget = Dyadic::pow2_neg(n);
      bound.check(measure(small) < budget && measure(full) < budget,
                  [&] { return cat("param ", i, " n=", n, " K=", K); });
      monotone.check(subset(small, full), [&] { return cat("param ", i, " n=", n, " K=", K); });
      Dyadic raw;
      for (std::size_t k = n + 1; k <= 64; ++k) raw += measure(en::clopen_enum(n, matrix_entry(f.prefix, n, k)));
      if (!(raw < budget)) ++rejected;
    }
  }
  guarded.check(rejected > 0, [] { return std::string("no parameter exercised the guard"); });
  null::NullParam zeros;
  zeros.prefix = BairePrefix(std::vector<Nat>(pair_index(4, 16) + 1, Nat(0)));
  for (std::size_t n = 0; n <= 4; ++n) {
    zero.check(null::null_stage(zeros, n, 16).is_empty(), [&] { return cat("n=", n); });
  }
  return r;
}

SuiteReport suite_null_encoder(std::uint64_t seed) {
  SuiteReport r{"null-encoder", {}, 0};
  auto& tail = r.add("tail bound: sum_{k >= a_{n+1}} measure(W_k) < 2^-(n+1)");
  auto& blocks = r.add("block bound: measure(block_m) < 2^-m");
  auto& identity = r.add("guard accepts every encoded term");
  auto& inclusion = r.add("level-10 truncation of each cover lies in its stage");
  auto& covered = r.add("every covered point is HoldsAtStage");
  auto& invalid = r.add("overweight cover raises InvariantViolated");
  auto& zeros = r.add("X = {0^omega} round trip for N <= 6");

  for (std::uint64_t i = 0; i < 50; ++i) {
    Gen g(seed, "null-encoder", i);
    const std::size_t N = g.below(7);
    const BitWord a = g.word(10);
    null::CoverFamily X;
    for (std::size_t n = 0; n <= N; ++n) {
      auto& cover = X.covers.emplace_back();
      if (g.coin(0.05)) continue;
      const std::size_t count = g.between(1, 7);
      for (std::size_t c = 0; c < count; ++c) {
        const std::size_t level = g.between(n + 4, 10);
        cover.push_back(Clopen::cylinder(c == 0 ? a.prefix(level) : g.word(level)));
      }
    }
    const auto trace = null::null_encode_trace(X);
    const auto f = null::null_encode(X);

    for (std::size_t n = 0; n + 1 < trace.cut.size(); ++n) {
      Dyadic sum;
      for (std::size_t k = trace.cut[n + 1]; k < trace.flat.size(); ++k) sum += measure(trace.flat[k]);
      tail.check(sum < Dyadic::pow2_neg(n + 1), [&] { return cat("family ", i, " n=", n); });
    }
    for (std::size_t m = 0; m < trace.blocks.size(); ++m) {
      blocks.check(measure(trace.blocks[m]) < Dyadic::pow2_neg(m), [&] { return cat("family ", i, " m=", m); });
    }
    std::vector<Clopen> stages;
    for (std::size_t n = 0; n < f.witness.size(); ++n) {
      Clopen raw;
      Dyadic total;
      for (std::size_t k = n + 1; k <= f.witness[n]; ++k) {
        const Clopen c = en::clopen_enum(n, matrix_entry(f.prefix, n, k));
        raw = unite(raw, c);
        total += measure(c);
      }
      stages.push_back(null::null_stage(f, n, f.witness[n]));
      identity.check(total < Dyadic::pow2_neg(n) && stages.back() == raw, [&] { return cat("family ", i, " n=", n); });
    }
    std::vector<bool> in_all(1024, true);
    for (std::size_t n = 0; n <= N; ++n) {
      Clopen cover;
      for (const auto& V : X.covers[n]) cover = unite(cover, V);
      const auto tc = oracle::truncation(cover, 10);
      const auto ts = oracle::truncation(stages[n], 10);
      bool inside = true;
      for (std::size_t k = 0; k < tc.size(); ++k) {
        inside = inside && (!tc[k] || ts[k]);
        in_all[k] = in_all[k] && tc[k];
      }
      inclusion.check(inside, [&] { return cat("family ", i, " n=", n); });
    }
    for (std::size_t k = 0; k < in_all.size(); ++k) {
      if (!in_all[k]) continue;
      const BitWord w = BitWord::from_index(10, k);
      covered.check(null::null_member(f, w, N) == Tri::HoldsAtStage, [&] { return cat("family ", i, " z=", w.str()); });
    }

    null::CoverFamily bad = X;
    const std::size_t n = g.below(N + 1);
    bad.covers[n].push_back(Clopen::cylinder(g.word(n + 1)));
    invalid.check(error_of([&] { (void)null::null_encode(bad); }) == ErrorKind::InvariantViolated,
                  [&] { return cat("family ", i, " n=", n); });
  }

  for (std::size_t N = 0; N <= 6; ++N) {
    null::CoverFamily X;
    for (std::size_t n = 0; n <= N; ++n) X.covers.push_back({Clopen::cylinder(BitWord(std::vector<bool>(n + 2, false)))});
    const auto f = null::null_encode(X);
    zeros.check(null::null_member(f, BitWord(std::vector<bool>(8, false)), N) == Tri::HoldsAtStage,
                [&] { return cat("N=", N); });
  }
  return r;
}

}  // namespace idealis::verify::detail
