#include "idealis/e_ideal.hpp"

#include "idealis/enumeration.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace idealis::e {

namespace en = enumeration;

namespace {

std::size_t small(const Nat& v, std::string_view what) {
  const auto s = to_size(v);
  if (!s || *s > kHardMaxLevel * 4) {
    throw Error(ErrorKind::LevelTooLarge, std::string(what) + " exceeds the level cap", v);
  }
  return *s;
}

// Level-L cylinders lying inside V, for any L.
Mask inside_mask(const Clopen& V, std::size_t L) {
  if (L >= V.level()) return V.mask_at(static_cast<unsigned>(L));
  const std::size_t block = std::size_t{1} << (V.level() - L);
  Mask out(std::size_t{1} << L);
  for (std::size_t u = 0; u < out.size(); ++u) {
    bool all = true;
    for (std::size_t k = 0; k < block && all; ++k) all = V.mask()[u * block + k];
    out[u] = all;
  }
  return out;
}

}  // namespace

ETripleParam decode_triple(const BairePrefix& packed) {
  return {matrix_row(packed, 0), matrix_row(packed, 1), matrix_row(packed, 2)};
}

BairePrefix pack_triple(const ETripleParam& p) {
  const BairePrefix rows[] = {p.x0, p.x1, p.x2};
  return matrix_pack(rows);
}

TermShape e_term_shape(const ETripleParam& p, std::size_t n) {
  TermShape s;
  s.m = small(p.x0.at(n) + n, "x0(n) + n");
  s.L = std::max(small(p.x1.at(n), "x1(n)"), s.m);
  check_level(s.L);
  s.t = (std::size_t{1} << s.L) - (std::size_t{1} << (s.L - s.m));
  s.l = p.x2.at(n) % en::binomial(std::size_t{1} << s.L, s.t);
  return s;
}

Clopen e_term(const ETripleParam& p, std::size_t n) {
  const TermShape s = e_term_shape(p, n);
  Mask mask(std::size_t{1} << s.L);
  for (std::size_t k : en::kcomb_unrank(mask.size(), s.t, s.l)) mask.set(k);
  return Clopen::from_mask(static_cast<unsigned>(s.L), std::move(mask));
}

Clopen e_open_stage(const ETripleParam& p, std::size_t n_max) {
  Clopen stage;
  for (std::size_t n = 0; n <= n_max; ++n) stage = unite(stage, e_term(p, n));
  return stage;
}

ETripleParam e_open_encode(const Clopen& V, std::size_t m_max) {
  ETripleParam p;
  for (std::size_t m = 0; m <= m_max; ++m) {
    // x0(m) = 1, so term m has measure 1 - 2^-(m+1).
    const std::size_t need = m + 1;
    bool found = false;
    const std::size_t top = std::max<std::size_t>(V.level(), need + 1);
    for (std::size_t L = need + 1; L <= top && !found; ++L) {
      check_level(L);
      const Mask mask = inside_mask(V, L);
      const std::size_t t = (std::size_t{1} << L) - (std::size_t{1} << (L - need));
      if (mask.count() < t) continue;
      std::vector<std::size_t> chosen;
      chosen.reserve(t);
      for (auto i = mask.find_first(); chosen.size() < t; i = mask.find_next(i)) chosen.push_back(i);
      p.x0.push_back(1);
      p.x1.push_back(L);
      p.x2.push_back(en::kcomb_rank(mask.size(), chosen));
      found = true;
    }
    if (!found) {
      throw Error(ErrorKind::InsufficientResolution,
                  "no level resolves measure 1 - 2^-" + std::to_string(need), Nat(m));
    }
  }
  return p;
}

ETripleParam e_row(const EParam& p, std::size_t r) {
  std::vector<Nat> row;
  // A triple written for stage n_max has its last cell at pair(2, n_max).
  const std::size_t width = pair_index(2, p.n_max) + 1;
  row.reserve(width);
  for (std::size_t c = 0; c < width; ++c) row.push_back(matrix_entry(p.prefix, r, c));
  return decode_triple(BairePrefix(std::move(row)));
}

Tri e_fsigma_member(const EParam& p, const BitPrefix& z, std::size_t rows, std::size_t n_max) {
  if (n_max > p.n_max) throw_insufficient_prefix(Nat(n_max) + 1, "e_fsigma_member stage");
  bool inside_all = true;
  bool misses_some = false;
  for (std::size_t r = 0; r < rows; ++r) {
    const ETripleParam row = e_row(p, r);
    const Clopen full = e_open_stage(row, p.n_max);
    const Clopen now = n_max == p.n_max ? full : e_open_stage(row, n_max);
    inside_all = inside_all && now.contains_cylinder(z);
    misses_some = misses_some || !full.meets_cylinder(z);
  }
  if (inside_all) return Tri::FailsAtStage;
  if (misses_some) return Tri::HoldsAtStage;
  return Tri::InsufficientData;
}

EParam e_encode(std::span<const Clopen> opens, std::size_t m_max) {
  std::vector<BairePrefix> rows;
  rows.reserve(opens.size());
  for (const auto& V : opens) {
    BairePrefix packed = pack_triple(e_open_encode(V, m_max));
    // Pad to the full triple width so e_row can read every row uniformly.
    std::vector<Nat> cells = packed.entries();
    cells.resize(pair_index(2, m_max) + 1, Nat(0));
    rows.emplace_back(std::move(cells));
  }
  return {matrix_pack(rows), opens.size(), m_max};
}

}  // namespace idealis::e
