#pragma once

// F_σ universal set for countable subsets of ω^ω: a parameter y codes the
// matrix of points h(y)(0), h(y)(1), ... and x is in the section iff x is
// one of the rows.

#include "idealis/space.hpp"
#include "idealis/tri.hpp"

#include <cstddef>
#include <span>

namespace idealis::countable {

/// `prefix` codes `rows` points, each known on its first `depth` coordinates.
struct CountableParam {
  BairePrefix prefix;
  std::size_t rows = 0;
  std::size_t depth = 0;

  friend bool operator==(const CountableParam&, const CountableParam&) = default;
};

/// Writes points[n](m) into matrix cell (n, m) for m < depth; every other
/// cell of the shortest covering prefix is 0. An empty list still yields a
/// zero row of the given depth.
CountableParam countable_encode(std::span<const BairePrefix> points, std::size_t depth);

/// Stage membership of x in the section of y restricted to rows [0, rows).
///
/// FailsAtStage when every row differs from x at some coordinate below
/// `depth`. HoldsAtStage when x covers the parameter's full row depth and
/// agrees there with some row. Otherwise InsufficientData.
///
/// Throws InsufficientPrefix when depth exceeds x or the parameter depth, or
/// when a requested row is not present in the prefix.
Tri countable_member(const CountableParam& y, const BairePrefix& x, std::size_t rows, std::size_t depth);

}  // namespace idealis::countable
