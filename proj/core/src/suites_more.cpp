// Suites for the E ideal, the Baire-space ideals, stage monotonicity and the
// Fubini products.

#include "idealis/baire.hpp"
#include "idealis/countable.hpp"
#include "idealis/e_ideal.hpp"
#include "idealis/enumeration.hpp"
#include "idealis/fubini.hpp"
#include "idealis/meager.hpp"
#include "idealis/null.hpp"
#include "idealis/oracle.hpp"
#include "suite_support.hpp"

#include <algorithm>
#include <functional>

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

Nat random_big(Gen& g) {
  Nat v = 0;
  for (int i = 0; i < 3; ++i) v = (v << 64) + g.below(~0ULL);
  return v;
}

e::ETripleParam random_triple(Gen& g, std::size_t terms, std::size_t top_level) {
  e::ETripleParam p;
  for (std::size_t n = 0; n < terms; ++n) {
    const std::size_t room = top_level > n ? top_level - n : 0;
    p.x0.push_back(g.below(std::min<std::size_t>(room, 3) + 1));
    // Half the time x1(n) < x0(n) + n, which forces the level lift.
    p.x1.push_back(g.coin() ? g.below(top_level + 1) : g.below(n + 1));
    p.x2.push_back(g.coin() ? random_big(g) : Nat(g.below(50)));
  }
  return p;
}

}  // namespace

SuiteReport suite_e_fullness(std::uint64_t seed) {
  SuiteReport r{"e-fullness", {}, 0};
  auto& full = r.add("measure(e_open_stage(p, n_max)) >= 1 - 2^-n_max");
  auto& size = r.add("term is 2^L - 2^(L-m) level-L cylinders of measure 1 - 2^-m");
  auto& monotone = r.add("e_open_stage grows with n_max");
  auto& injective = r.add("distinct subset ranks give distinct terms");
  auto& encoder = r.add("encoder stage is inside V with measure >= 1 - 2^-(m_max+1)");
  auto& resolution = r.add("V of measure 1/2 raises InsufficientResolution(1)");
  auto& section = r.add("E-section contains points outside an encoded stage");
  auto& vacuous = r.add("rows = 0 gives FailsAtStage");

  for (std::uint64_t i = 0; i < 100; ++i) {
    Gen g(seed, "e-param", i);
    const auto p = random_triple(g, 9, 8);
    Clopen previous;
    for (std::size_t n = 0; n <= 8; ++n) {
      const auto shape = e::e_term_shape(p, n);
      const Clopen term = e::e_term(p, n);
      const std::size_t t = (std::size_t{1} << shape.L) - (std::size_t{1} << (shape.L - shape.m));
      size.check(shape.t == t && term.mask_at(static_cast<unsigned>(shape.L)).count() == t &&
                     measure(term) == Dyadic::one() - Dyadic::pow2_neg(shape.m),
                 [&] { return cat("param ", i, " n=", n); });
      const Clopen stage = e::e_open_stage(p, n);
      full.check(!(measure(stage) < Dyadic::one() - Dyadic::pow2_neg(n)), [&] { return cat("param ", i, " n_max=", n); });
      monotone.check(subset(previous, stage), [&] { return cat("param ", i, " n_max=", n); });
      previous = stage;
      if (n > 0 && en::binomial(std::size_t{1} << shape.L, shape.t) > 1) {
        auto q = p;
        auto cells = q.x2.entries();
        cells[n] = shape.l + 1;
        q.x2 = BairePrefix(cells);
        injective.check(e::e_term(q, n) != term, [&] { return cat("param ", i, " n=", n); });
      }
    }
  }

  for (std::uint64_t i = 0; i < 30; ++i) {
    Gen g(seed, "e-encode", i);
    Clopen hole;
    const std::size_t holes = g.between(1, 4);
    for (std::size_t c = 0; c < holes; ++c) hole = unite(hole, Clopen::cylinder(g.word(g.between(4, 10))));
    const Clopen V = complement(hole);
    // The largest m_max with measure(hole) <= 2^-(m_max+1).
    std::size_t m_max = 0;
    while (!(Dyadic::pow2_neg(m_max + 2) < measure(hole))) ++m_max;
    const auto p = e::e_open_encode(V, m_max);
    const Clopen stage = e::e_open_stage(p, m_max);
    const auto ts = oracle::truncation(stage, 10);
    const auto tv = oracle::truncation(V, 10);
    bool inside = true;
    for (std::size_t k = 0; k < ts.size(); ++k) inside = inside && (!ts[k] || tv[k]);
    encoder.check(inside && !(measure(stage) < Dyadic::one() - Dyadic::pow2_neg(m_max + 1)),
                  [&] { return cat("V ", show(V), " m_max=", m_max); });

    const std::vector<Clopen> rows{V};
    const auto ep = e::e_encode(rows, m_max);
    for (int q = 0; q < 4; ++q) {
      const BitWord z = g.word(10);
      if (oracle::contains_word(stage, z)) continue;
      section.check(e::e_fsigma_member(ep, z, 1, m_max) == Tri::HoldsAtStage, [&] { return show(V) + " " + z.str(); });
    }
  }
  const Clopen punctured = complement(Clopen::cylinder(BitWord::parse("00000")));
  for (std::size_t m_max = 0; m_max <= 4; ++m_max) {
    const auto p = e::e_open_encode(punctured, m_max);
    encoder.check(subset(e::e_open_stage(p, m_max), punctured), [&] { return cat("punctured m_max=", m_max); });
  }
  resolution.check(error_of([&] { (void)e::e_open_encode(punctured, 5); }) == ErrorKind::InsufficientResolution,
                   [] { return std::string("punctured m_max=5"); });
  const std::vector<Clopen> rows{punctured};
  section.check(e::e_fsigma_member(e::e_encode(rows, 4), BitWord::parse("00000"), 1, 4) == Tri::HoldsAtStage,
                [] { return std::string("z = 00000"); });
  try {
    (void)e::e_open_encode(Clopen::cylinder(BitWord::parse("0")), 3);
    resolution.check(false, [] { return std::string("accepted [0]"); });
  } catch (const Error& err) {
    resolution.check(err.kind() == ErrorKind::InsufficientResolution && err.value() == Nat(1),
                     [] { return std::string("wrong error for [0]"); });
  }
  vacuous.check(e::e_fsigma_member(e::e_encode({}, 3), BitWord::parse("01"), 0, 3) == Tri::FailsAtStage,
                [] { return std::string("rows=0"); });
  return r;
}

SuiteReport suite_ksigma_diagonal(std::uint64_t seed) {
  SuiteReport r{"ksigma-diagonal", {}, 0};
  auto& diagonal = r.add("diagonal is not dominated from any n < 11");
  auto& encode = r.add("ksigma_encode dominates its inputs from 0 and is the pointwise max");
  auto& reflexive = r.add("dominated_from(y, y, n) for every n");
  auto& order = r.add("antitone in x, monotone in y and in n");
  auto& window = r.add("the window starts strictly after n");
  auto& mismatch = r.add("points of different lengths raise LengthMismatch");

  for (std::uint64_t i = 0; i < 100; ++i) {
    Gen g(seed, "ksigma", i);
    BairePrefix y;
    for (int m = 0; m < 12; ++m) y.push_back(g.coin(0.2) ? random_big(g) : Nat(g.below(20)));
    const baire::KsigmaParam bound{y};
    const BairePrefix d = baire::ksigma_diagonal(bound);
    for (std::size_t n = 0; n < 11; ++n) {
      diagonal.check(!baire::dominated_from(bound, d, n), [&] { return cat("bound ", i, " n=", n); });
      reflexive.check(baire::dominated_from(bound, y, n), [&] { return cat("bound ", i, " n=", n); });
    }

    std::vector<BairePrefix> points(5);
    for (auto& p : points) {
      for (int m = 0; m < 10; ++m) p.push_back(g.below(100));
    }
    const auto k = baire::ksigma_encode(points);
    bool all = true;
    for (const auto& p : points) all = all && baire::dominated_from(k, p, 0);
    bool is_max = k.bound.size() == 10;
    for (std::size_t m = 0; m < 10 && is_max; ++m) {
      Nat best = 0;
      for (const auto& p : points) best = std::max(best, p[m]);
      is_max = k.bound[m] == best;
    }
    encode.check(all && is_max, [&] { return cat("points ", i); });

    // x <= x' pointwise, y <= y' pointwise, n <= n'.
    const auto& x = points[0];
    BairePrefix bigger_x, bigger_y;
    for (std::size_t m = 0; m < 10; ++m) {
      bigger_x.push_back(x[m] + g.below(3));
      bigger_y.push_back(points[1][m] + g.below(3));
    }
    const baire::KsigmaParam y1{points[1]}, y2{bigger_y};
    const std::size_t n = g.below(8);
    const std::size_t n2 = n + g.below(9 - n);
    const bool a = baire::dominated_from(y1, bigger_x, n);
    const bool b = baire::dominated_from(y1, x, n);
    const bool c = baire::dominated_from(y2, x, n);
    const bool e = baire::dominated_from(y1, x, n2);
    order.check((!a || b) && (!b || c) && (!b || e), [&] { return cat("case ", i); });
  }
  window.check(baire::dominated_from({BairePrefix{0, 0, 0}}, BairePrefix{99, 0, 0}, 0),
               [] { return std::string("x(0) = 99"); });
  const std::vector<BairePrefix> uneven{{1, 2}, {1}};
  mismatch.check(error_of([&] { (void)baire::ksigma_encode(uneven); }) == ErrorKind::LengthMismatch,
                 [] { return std::string("lengths 2 and 1"); });
  return r;
}

namespace {

// Every sequence of length <= max_len with entries < base.
std::vector<std::vector<Nat>> all_sequences(std::size_t max_len, unsigned base) {
  std::vector<std::vector<Nat>> out{{}};
  std::size_t from = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t to = out.size();
    for (std::size_t i = from; i < to; ++i) {
      for (unsigned v = 0; v < base; ++v) {
        auto s = out[i];
        s.push_back(v);
        out.push_back(std::move(s));
      }
    }
    from = to;
  }
  return out;
}

}  // namespace

SuiteReport suite_laver_oracle(std::uint64_t seed) {
  SuiteReport r{"laver-oracle", {}, 0};
  auto& agree = r.add("laver_witnesses matches brute force on every window, |f| <= 6, entries < 4");
  auto& zero = r.add("Phi = 0 yields no witnesses");
  auto& additive = r.add("witness counts add over adjacent windows");
  auto& ones = r.add("Phi = 1, f = 0, window [0, 8) gives 8");
  auto& decode = r.add("decoded Phi equals the encoded map");
  auto& partial = r.add("a code past a non-exhausted prefix raises InsufficientPrefix");

  const auto domain = all_sequences(5, 4);
  const auto points = all_sequences(6, 4);
  baire::PhiMap zeros;
  for (const auto& s : domain) zeros[s] = 0;
  const auto p0 = baire::laver_encode(zeros);
  const auto empty = baire::laver_encode({});

  for (std::uint64_t i = 0; i < 50; ++i) {
    Gen g(seed, "laver", i);
    baire::PhiMap phi;
    for (const auto& s : domain) phi[s] = g.coin(0.3) ? 0 : g.below(5);
    const auto p = baire::laver_encode(phi);
    bool decoded = true;
    for (const auto& [s, v] : phi) decoded = decoded && p.phi(s) == v;
    decode.check(decoded, [&] { return cat("map ", i); });
    for (const auto& f : points) {
      const BairePrefix fp(f);
      const std::size_t L = f.size();
      for (std::size_t n0 = 0; n0 <= L; ++n0) {
        const std::size_t got = baire::laver_witnesses(p, fp, n0, L);
        agree.check(got == oracle::laver(phi, f, n0, L), [&] { return cat("map ", i, " n0=", n0, " |f|=", L); });
        if (n0 > 0) {
          const std::size_t head = baire::laver_witnesses(p, fp, 0, n0);
          agree.check(head == oracle::laver(phi, f, 0, n0), [&] { return cat("map ", i, " n1=", n0, " |f|=", L); });
          additive.check(head + got == baire::laver_witnesses(p, fp, 0, L), [&] { return cat("map ", i); });
        }
      }
    }
  }
  for (const auto& f : points) {
    const BairePrefix fp(f);
    zero.check(baire::laver_witnesses(p0, fp, 0, f.size()) == 0 && baire::laver_witnesses(empty, fp, 0, f.size()) == 0,
               [&] { return cat("|f|=", f.size()); });
  }
  baire::PhiMap one;
  for (std::size_t len = 0; len < 8; ++len) one[std::vector<Nat>(len, Nat(0))] = 1;
  ones.check(baire::laver_witnesses(baire::laver_encode(one), BairePrefix(std::vector<Nat>(8, Nat(0))), 0, 8) == 8,
             [] { return std::string("f = 0"); });
  // Only <> is coded, so the prefix has length 1 and <0> has code 1.
  baire::LaverParam cut = baire::laver_encode({{std::vector<Nat>{}, Nat(3)}});
  cut.exhausted = false;
  partial.check(baire::laver_witnesses(cut, BairePrefix{2}, 0, 1) == 1 &&
                    error_of([&] { (void)baire::laver_witnesses(cut, BairePrefix{0, 0}, 0, 2); }) ==
                        ErrorKind::InsufficientPrefix,
                [] { return std::string("prefix of length 1"); });
  return r;
}

namespace {

// Answers on a grid indexed by (point length, stage); nullopt where the
// evaluator reports InsufficientPrefix. Checks that no entry dominated by
// another disagrees decisively with it.
bool grid_monotone(const std::vector<std::vector<std::optional<Tri>>>& grid) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = 0; j < grid[i].size(); ++j) {
      if (!grid[i][j]) continue;
      for (std::size_t i2 = i; i2 < grid.size(); ++i2) {
        for (std::size_t j2 = j; j2 < grid[i2].size(); ++j2) {
          if (grid[i2][j2] && !refines(*grid[i][j], *grid[i2][j2])) return false;
        }
      }
    }
  }
  return true;
}

template <class F>
std::vector<std::vector<std::optional<Tri>>> fill(std::size_t lengths, std::size_t stages, F&& eval) {
  std::vector<std::vector<std::optional<Tri>>> grid(lengths, std::vector<std::optional<Tri>>(stages));
  for (std::size_t i = 0; i < lengths; ++i) {
    for (std::size_t j = 0; j < stages; ++j) {
      try {
        grid[i][j] = eval(i, j);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::InsufficientPrefix) throw;
      }
    }
  }
  return grid;
}

Clopen random_dense(Gen& g, unsigned level) {
  Mask m(std::size_t{1} << level);
  const std::size_t spread = m.size() / 4;
  for (std::size_t u = 0; u < 4; ++u) m.set(u * spread + g.below(spread));
  for (std::size_t k = 0; k < m.size(); ++k) m[k] = m[k] || g.coin(0.2);
  return Clopen::from_mask(level, m);
}

null::CoverFamily random_covers(Gen& g, std::size_t N, const BitWord& a) {
  null::CoverFamily X;
  for (std::size_t n = 0; n <= N; ++n) {
    auto& cover = X.covers.emplace_back();
    for (std::size_t c = 0; c < g.between(1, 3); ++c) {
      const std::size_t level = g.between(n + 3, 8);
      cover.push_back(Clopen::cylinder(c == 0 && g.coin(0.7) ? a.prefix(level) : g.word(level)));
    }
  }
  return X;
}

null::NullParam random_raw_null(Gen& g, std::size_t rows, std::size_t cols) {
  std::vector<BairePrefix> grid(rows);
  for (auto& row : grid) {
    std::vector<Nat> cells(cols + 1);
    for (auto& c : cells) c = g.coin(0.4) ? 0 : g.below(40);
    row = BairePrefix(std::move(cells));
  }
  null::NullParam f;
  f.prefix = matrix_pack(grid);
  for (std::size_t n = 0; n < rows; ++n) f.witness.push_back(cols);
  f.exhausted = g.coin();
  return f;
}

}  // namespace

SuiteReport suite_tri_monotone(std::uint64_t seed) {
  SuiteReport r{"tri-monotone", {}, 0};
  auto& countable = r.add("countable_member never flips (500 pairs)");
  auto& meager = r.add("meager_eval never flips (500 pairs)");
  auto& fxp = r.add("fxp_eval never flips (500 pairs)");
  auto& null = r.add("null_member never flips (500 pairs)");
  auto& eset = r.add("e_fsigma_member never flips (500 pairs)");
  auto& product = r.add("product_member never flips (500 pairs)");

  for (std::uint64_t i = 0; i < 500; ++i) {
    Gen g(seed, "tri-countable", i);
    const std::size_t depth = g.between(1, 5);
    std::vector<BairePrefix> points(g.between(1, 4));
    for (auto& p : points) {
      for (std::size_t c = 0; c < depth; ++c) p.push_back(g.below(2));
    }
    const auto y = countable::countable_encode(points, depth);
    BairePrefix x = g.coin() ? points[0] : BairePrefix{};
    while (x.size() < 8) x.push_back(g.below(2));
    const auto grid = fill(9, depth + 1, [&](std::size_t len, std::size_t d) {
      return countable::countable_member(y, x.prefix(len), points.size(), d);
    });
    countable.check(grid_monotone(grid), [&] { return cat("pair ", i); });
  }

  for (std::uint64_t i = 0; i < 500; ++i) {
    Gen g(seed, "tri-meager", i);
    meager::MeagerParam p;
    if (g.coin()) {
      std::vector<Clopen> rows(g.between(1, 2));
      for (auto& W : rows) W = random_dense(g, static_cast<unsigned>(g.between(2, 6)));
      p = meager::meager_encode(rows, 4);
    } else {
      std::vector<BairePrefix> rows(2);
      for (auto& row : rows) {
        for (int c = 0; c < 5; ++c) row.push_back(g.below(16));
      }
      p = {matrix_pack(rows), 2, 4};
    }
    const BitWord z = g.word(10);
    const auto grid = fill(11, 5, [&](std::size_t len, std::size_t n_max) {
      return meager::meager_eval(p, z.prefix(len), p.rows, n_max);
    });
    meager.check(grid_monotone(grid), [&] { return cat("pair ", i); });
  }

  for (std::uint64_t i = 0; i < 500; ++i) {
    Gen g(seed, "tri-fxp", i);
    BairePrefix y;
    for (int n = 0; n < 3; ++n) y.push_back(g.below(4));
    const auto P = meager::partition_from(y);
    const BitWord x = g.word(12);
    BitWord z;
    for (std::size_t k = 0; k < 12; ++k) z.push_back(g.coin(0.15) ? !x[k] : x[k]);
    const std::size_t from = g.below(3);
    const auto grid = fill(13, 1, [&](std::size_t len, std::size_t) {
      return meager::fxp_eval(x.prefix(len), P, z.prefix(len), from);
    });
    fxp.check(grid_monotone(grid), [&] { return cat("pair ", i); });
  }

  for (std::uint64_t i = 0; i < 500; ++i) {
    Gen g(seed, "tri-null", i);
    const std::size_t N = g.below(3);
    const BitWord z = g.word(8);
    null::NullParam f = g.coin() ? null::null_encode(random_covers(g, N, z)) : random_raw_null(g, N + 1, 10);
    const std::size_t top = *std::min_element(f.witness.begin(), f.witness.begin() + static_cast<std::ptrdiff_t>(N + 1));
    const std::size_t steps = top > N ? top - N : 1;
    const auto grid = fill(9, steps, [&](std::size_t len, std::size_t s) {
      std::vector<std::size_t> bounds;
      for (std::size_t n = 0; n <= N; ++n) bounds.push_back(std::min(n + 1 + s, f.witness[n]));
      return null::null_member(f, z.prefix(len), N, bounds);
    });
    null.check(grid_monotone(grid), [&] { return cat("pair ", i); });
  }

  for (std::uint64_t i = 0; i < 500; ++i) {
    Gen g(seed, "tri-e", i);
    e::EParam p;
    if (g.coin()) {
      std::vector<Clopen> rows(g.between(1, 2));
      for (auto& V : rows) V = complement(Clopen::cylinder(g.word(g.between(3, 6))));
      p = e::e_encode(rows, 2);
    } else {
      std::vector<BairePrefix> rows(2);
      for (auto& row : rows) {
        e::ETripleParam t;
        for (std::size_t n = 0; n <= 3; ++n) {
          t.x0.push_back(g.below(3));
          t.x1.push_back(g.below(7));
          t.x2.push_back(g.below(1000));
        }
        auto cells = e::pack_triple(t).entries();
        cells.resize(pair_index(2, 3) + 1, Nat(0));
        row = BairePrefix(std::move(cells));
      }
      p = {matrix_pack(rows), 2, 3};
    }
    const BitWord z = g.word(8);
    const auto grid = fill(9, p.n_max + 1, [&](std::size_t len, std::size_t n_max) {
      return e::e_fsigma_member(p, z.prefix(len), p.rows, n_max);
    });
    eset.check(grid_monotone(grid), [&] { return cat("pair ", i); });
  }

  for (std::uint64_t i = 0; i < 500; ++i) {
    Gen g(seed, "tri-product", i);
    const auto variant = g.coin() ? fubini::Variant::NullMeager : fubini::Variant::MeagerNull;
    const BitWord y = g.word(6), z = g.word(6);
    const BitWord plane = fubini::interleave({y, z});
    fubini::ProductInput input;
    const std::size_t N = g.below(2);
    input.covers = random_covers(g, N, variant == fubini::Variant::NullMeager ? y : plane);
    input.dense = {random_dense(g, static_cast<unsigned>(g.between(2, 6)))};
    input.n_max = 3;
    const auto pp = fubini::product_encode(variant, input);
    const std::size_t top = pp.null_part.witness.at(N);
    const auto grid = fill(7, 4, [&](std::size_t len, std::size_t s) {
      fubini::Stages stages;
      stages.null_levels = N;
      std::vector<std::size_t> bounds;
      for (std::size_t n = 0; n <= N; ++n) {
        bounds.push_back(std::min(n + 1 + s * (top / 3 + 1), pp.null_part.witness[n]));
      }
      stages.null_bounds = bounds;
      stages.meager_n_max = s;
      return fubini::product_member(pp, {y.prefix(len), z.prefix(len)}, stages);
    });
    product.check(grid_monotone(grid), [&] { return cat("pair ", i); });
  }
  return r;
}

SuiteReport suite_fubini_table(std::uint64_t seed) {
  SuiteReport r{"fubini-table", {}, 0};
  auto& table = r.add("composition table is Kleene disjunction (9 cases)");
  auto& compose = r.add("composition preserves refinement (all refinement pairs)");
  auto& components = r.add("product_member is the disjunction of its components");
  auto& weave = r.add("deinterleave inverts interleave, |y| = |z| <= 5");
  auto& rectangle = r.add("rectangle law: covered first coordinate gives HoldsAtStage for every z");
  auto& planar = r.add("plane point outside the planar stage gives HoldsAtStage");
  auto& empty = r.add("empty components give FailsAtStage");
  auto& shape = r.add("section shape is Sigma^0_3 with quantifier depth 3");
  auto& diag = r.add("section diagnostic examples");

  const Tri all[] = {Tri::HoldsAtStage, Tri::FailsAtStage, Tri::InsufficientData};
  for (Tri a : all) {
    for (Tri b : all) {
      const Tri expected = (a == Tri::HoldsAtStage || b == Tri::HoldsAtStage) ? Tri::HoldsAtStage
                           : (a == Tri::FailsAtStage && b == Tri::FailsAtStage) ? Tri::FailsAtStage
                                                                                  : Tri::InsufficientData;
      table.check(tri_or(a, b) == expected, [&] { return cat(to_string(a), " or ", to_string(b)); });
      for (Tri a2 : all) {
        for (Tri b2 : all) {
          if (!refines(a, a2) || !refines(b, b2)) continue;
          // Refinement only ever resolves InsufficientData.
          if (a != a2 && a != Tri::InsufficientData) continue;
          if (b != b2 && b != Tri::InsufficientData) continue;
          compose.check(refines(tri_or(a, b), tri_or(a2, b2)), [&] { return cat(to_string(a), ",", to_string(b)); });
        }
      }
    }
  }

  for (std::size_t len = 0; len <= 5; ++len) {
    for (std::uint32_t yv = 0; yv < (1u << len); ++yv) {
      for (std::uint32_t zv = 0; zv < (1u << len); ++zv) {
        const fubini::ProductPoint p{BitWord::from_index(len, yv), BitWord::from_index(len, zv)};
        const auto back = fubini::deinterleave(fubini::interleave(p));
        weave.check(back.y == p.y && back.z == p.z, [&] { return p.y.str() + "," + p.z.str(); });
      }
    }
  }
  weave.check(fubini::interleave({BitWord::parse("01"), BitWord::parse("10")}).str() == "0110",
              [] { return std::string("(01, 10)"); });
  weave.check(error_of([] { (void)fubini::interleave({BitWord::parse("0"), BitWord()}); }) == ErrorKind::LengthMismatch,
              [] { return std::string("lengths 1 and 0"); });

  for (std::uint64_t i = 0; i < 100; ++i) {
    Gen g(seed, "fubini", i);
    const BitWord a = g.word(8), b = g.word(8);
    // N⊗M with a null factor covering a.
    fubini::ProductInput nm;
    const std::size_t N = g.below(4);
    for (std::size_t n = 0; n <= N; ++n) nm.covers.covers.push_back({Clopen::cylinder(a.prefix(n + 3))});
    nm.dense = {random_dense(g, 4)};
    nm.n_max = 3;
    const auto pnm = fubini::product_encode(fubini::Variant::NullMeager, nm);
    const BitWord other = g.word(8);
    rectangle.check(fubini::product_member(pnm, {a, other}) == Tri::HoldsAtStage, [&] { return cat("case ", i); });

    // M⊗N with a meager factor missing a, i.e. a dense W avoiding a's cylinder.
    fubini::ProductInput mn;
    mn.dense = {complement(Clopen::cylinder(a.prefix(6)))};
    mn.n_max = 3;
    mn.covers.covers = {{}};
    const auto pmn = fubini::product_encode(fubini::Variant::MeagerNull, mn);
    rectangle.check(fubini::product_member(pmn, {a, other}) == Tri::HoldsAtStage, [&] { return cat("mirror ", i); });

    // Planar meager part of N⊗M avoiding interleave(a, b).
    fubini::ProductInput plane;
    plane.covers.covers = {{}};
    plane.dense = {complement(Clopen::cylinder(fubini::interleave({a, b}).prefix(8)))};
    plane.n_max = 3;
    const auto pp = fubini::product_encode(fubini::Variant::NullMeager, plane);
    planar.check(fubini::product_member(pp, {a, b}) == Tri::HoldsAtStage, [&] { return cat("case ", i); });

    fubini::ProductInput none;
    none.n_max = 2;
    for (auto v : {fubini::Variant::NullMeager, fubini::Variant::MeagerNull}) {
      const auto pe = fubini::product_encode(v, none);
      empty.check(fubini::product_member(pe, {a, b}) == Tri::FailsAtStage, [&] { return cat("case ", i); });
    }

    const BitWord y = g.word(6), z = g.word(6);
    for (const auto* param : {&pnm, &pmn}) {
      const BitWord w = fubini::interleave({y, z});
      const bool nm_variant = param->variant == fubini::Variant::NullMeager;
      const Tri nt = null::null_member(param->null_part, nm_variant ? y : w, param->null_part.witness.size() - 1);
      const Tri mt = meager::meager_eval(param->meager_part, nm_variant ? w : y, param->meager_part.rows,
                                         param->meager_part.n_max);
      components.check(fubini::product_member(*param, {y, z}) == tri_or(nt, mt), [&] { return cat("case ", i); });
    }
  }

  for (auto v : {fubini::Variant::NullMeager, fubini::Variant::MeagerNull}) {
    const auto s = fubini::section_shape(v);
    shape.check(fubini::classify(s) == fubini::BorelClass{true, 3} && fubini::quantifier_depth(s) == 3,
                [&] { return std::string(fubini::to_string(v)); });
  }

  const unsigned d = 3;
  const std::size_t side = 8;
  Mask full(side * side), diagonal(side * side);
  full.set();
  for (std::size_t x = 0; x < side; ++x) diagonal.set(x * side + x);
  const fubini::Proxy half{fubini::Proxy::Kind::Null, Dyadic(1, 1), 0};
  const fubini::Proxy nwd{fubini::Proxy::Kind::Nwd, Dyadic(), 1};
  diag.check(fubini::section_diagnostic(full, d, half).all(), [] { return std::string("full square"); });
  diag.check(fubini::section_diagnostic(Mask(side * side), d, half).none(), [] { return std::string("empty square"); });
  diag.check(fubini::section_diagnostic(diagonal, d, half).none(), [] { return std::string("diagonal, null(1/2)"); });
  diag.check(fubini::section_diagnostic(full, d, nwd).all(), [] { return std::string("full square, nwd(1)"); });
  diag.check(fubini::section_diagnostic(diagonal, d, nwd).none(), [] { return std::string("diagonal, nwd(1)"); });
  return r;
}

}  // namespace idealis::verify::detail
