#pragma once

// Universal sets for the meager ideal on 2^ω: open sets whose sections are
// dense, their G_δ intersections, and the complementary meager F_σ sections.
// Also the interval-partition sets F_{x,P} that form a base of meager sets.

#include "idealis/space.hpp"
#include "idealis/tri.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace idealis::meager {

struct Interval {
  std::size_t begin = 0;
  std::size_t end = 0;  // exclusive

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct IntervalPartition {
  std::vector<Interval> intervals;

  friend bool operator==(const IntervalPartition&, const IntervalPartition&) = default;
};

/// I_0 = [0, y(0)+1), I_n = [a_{n-1}, a_{n-1} + y(n) + 1).
IntervalPartition partition_from(const BairePrefix& y);

/// Compares x and z on the complete blocks n >= from_block of P.
///
/// FailsAtStage when some block inside both prefixes has x|I_n = z|I_n.
/// HoldsAtStage when every block of P from `from_block` on is inside both
/// prefixes and differs. InsufficientData otherwise. Throws
/// InsufficientPrefix when P has no block `from_block` or that block is not
/// inside both prefixes.
Tri fxp_eval(const BitPrefix& x, const IntervalPartition& P, const BitPrefix& z, std::size_t from_block);

struct DenseOpenParam {
  BairePrefix prefix;

  friend bool operator==(const DenseOpenParam&, const DenseOpenParam&) = default;
};

/// Rows of dense-open parameters packed by matrix layout. `n_max` is the
/// stage each row was written for.
struct MeagerParam {
  BairePrefix prefix;
  std::size_t rows = 0;
  std::size_t n_max = 0;

  friend bool operator==(const MeagerParam&, const MeagerParam&) = default;
};

/// ⋃_{1<=n<=n_max} U_{kprime(n, x(n))}.
Clopen dense_section_stage(const DenseOpenParam& x, std::size_t n_max);

/// x(0) = 0 and, for 1 <= n <= n_max, x(n) is the kprime rank of the least
/// basic open subset of U_n ∩ W. Throws NotDense(n) when U_n ∩ W = ∅.
DenseOpenParam dense_open_encode(const Clopen& W, std::size_t n_max);

/// Row r of p, with n_max + 1 columns.
DenseOpenParam meager_row(const MeagerParam& p, std::size_t r);

/// Stage membership of z in the meager section (the complement of the
/// intersection of the row sections).
///
/// FailsAtStage when [z] lies inside every row's stage union at `n_max`.
/// HoldsAtStage when [z] misses the stage union of some row at the
/// parameter's own n_max. InsufficientData otherwise. Throws
/// InsufficientPrefix when n_max exceeds p.n_max or a row is missing.
Tri meager_eval(const MeagerParam& p, const BitPrefix& z, std::size_t rows, std::size_t n_max);

MeagerParam meager_encode(std::span<const Clopen> dense_opens, std::size_t n_max);

}  // namespace idealis::meager
