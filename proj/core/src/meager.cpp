#include "idealis/meager.hpp"

#include "idealis/enumeration.hpp"

#include <algorithm>
#include <string>

namespace idealis::meager {

namespace en = enumeration;

IntervalPartition partition_from(const BairePrefix& y) {
  IntervalPartition P;
  std::size_t a = 0;
  for (std::size_t n = 0; n < y.size(); ++n) {
    const auto width = to_size(y[n] + 1);
    if (!width || *width > std::numeric_limits<std::size_t>::max() - a) {
      throw Error(ErrorKind::IndexOutOfRange, "interval width too large", y[n]);
    }
    P.intervals.push_back({a, a + *width});
    a += *width;
  }
  return P;
}

Tri fxp_eval(const BitPrefix& x, const IntervalPartition& P, const BitPrefix& z, std::size_t from_block) {
  const std::size_t known = std::min(x.size(), z.size());
  const auto& I = P.intervals;
  if (from_block >= I.size()) throw_insufficient_prefix(Nat(from_block) + 1, "fxp_eval partition");
  if (I[from_block].end > known) throw_insufficient_prefix(Nat(I[from_block].end), "fxp_eval points");

  bool all_complete = true;
  for (std::size_t n = from_block; n < I.size(); ++n) {
    if (I[n].end > known) {
      all_complete = false;
      break;
    }
    bool equal = true;
    for (std::size_t i = I[n].begin; i < I[n].end && equal; ++i) equal = x[i] == z[i];
    if (equal) return Tri::FailsAtStage;
  }
  return all_complete ? Tri::HoldsAtStage : Tri::InsufficientData;
}

Clopen dense_section_stage(const DenseOpenParam& x, std::size_t n_max) {
  if (x.prefix.size() <= n_max) throw_insufficient_prefix(Nat(n_max) + 1, "dense_section_stage");
  Clopen stage;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const Nat j = en::kprime(Nat(n), x.prefix[n], en::BaseSpace::Cantor);
    stage = unite(stage, en::basic_open_cantor(j));
  }
  return stage;
}

DenseOpenParam dense_open_encode(const Clopen& W, std::size_t n_max) {
  std::vector<Nat> x(n_max + 1, Nat(0));
  for (std::size_t n = 1; n <= n_max; ++n) {
    const BitWord stem = *en::cantor_basic_word(Nat(n));
    bool found = false;
    // Extensions of the stem by d bits; past W's level nothing new appears.
    const std::size_t depth = W.level() > stem.size() ? W.level() - stem.size() : 0;
    for (std::size_t d = 0; d <= depth && !found; ++d) {
      const std::uint64_t width = std::uint64_t{1} << d;
      for (std::uint64_t j = 0; j < width; ++j) {
        BitWord w = stem;
        const BitWord tail = BitWord::from_index(d, j);
        for (bool b : tail.bits()) w.push_back(b);
        if (W.contains_cylinder(w)) {
          x[n] = Nat(width - 1 + j);
          found = true;
          break;
        }
      }
    }
    if (!found) {
      throw Error(ErrorKind::NotDense, "W misses U_" + std::to_string(n), Nat(n));
    }
  }
  return {BairePrefix(std::move(x))};
}

DenseOpenParam meager_row(const MeagerParam& p, std::size_t r) {
  std::vector<Nat> row;
  row.reserve(p.n_max + 1);
  for (std::size_t c = 0; c <= p.n_max; ++c) row.push_back(matrix_entry(p.prefix, r, c));
  return {BairePrefix(std::move(row))};
}

Tri meager_eval(const MeagerParam& p, const BitPrefix& z, std::size_t rows, std::size_t n_max) {
  if (n_max > p.n_max) throw_insufficient_prefix(Nat(n_max) + 1, "meager_eval stage");
  bool inside_all = true;
  bool misses_some = false;
  for (std::size_t r = 0; r < rows; ++r) {
    const DenseOpenParam row = meager_row(p, r);
    const Clopen full = dense_section_stage(row, p.n_max);
    const Clopen now = n_max == p.n_max ? full : dense_section_stage(row, n_max);
    inside_all = inside_all && now.contains_cylinder(z);
    misses_some = misses_some || !full.meets_cylinder(z);
  }
  if (inside_all) return Tri::FailsAtStage;
  if (misses_some) return Tri::HoldsAtStage;
  return Tri::InsufficientData;
}

MeagerParam meager_encode(std::span<const Clopen> dense_opens, std::size_t n_max) {
  std::vector<BairePrefix> rows;
  rows.reserve(dense_opens.size());
  for (const auto& W : dense_opens) rows.push_back(dense_open_encode(W, n_max).prefix);
  return {matrix_pack(rows), dense_opens.size(), n_max};
}

}  // namespace idealis::meager
