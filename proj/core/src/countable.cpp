#include "idealis/countable.hpp"

#include <algorithm>
#include <vector>

namespace idealis::countable {

CountableParam countable_encode(std::span<const BairePrefix> points, std::size_t depth) {
  std::vector<BairePrefix> rows;
  rows.reserve(std::max<std::size_t>(points.size(), 1));
  for (const auto& point : points) {
    if (point.size() < depth) throw_insufficient_prefix(Nat(depth), "countable_encode point");
    rows.push_back(point.prefix(depth));
  }
  if (rows.empty()) rows.emplace_back(std::vector<Nat>(depth, Nat(0)));
  return {matrix_pack(rows), points.size(), depth};
}

Tri countable_member(const CountableParam& y, const BairePrefix& x, std::size_t rows, std::size_t depth) {
  if (depth > x.size()) throw_insufficient_prefix(Nat(depth), "countable_member point");
  if (depth > y.depth) throw_insufficient_prefix(Nat(depth), "countable_member parameter depth");
  if (rows > 0 && y.depth > 0) {
    // Touch the last cell of the last requested row.
    (void)matrix_entry(y.prefix, rows - 1, y.depth - 1);
  }

  bool all_refuted = true;
  bool some_certified = false;
  const bool covers_rows = x.size() >= y.depth;
  for (std::size_t r = 0; r < rows; ++r) {
    bool refuted = false;
    bool agrees = true;
    for (std::size_t c = 0; c < y.depth && c < x.size(); ++c) {
      if (matrix_entry(y.prefix, r, c) != x[c]) {
        agrees = false;
        if (c < depth) refuted = true;
        break;
      }
    }
    all_refuted = all_refuted && refuted;
    some_certified = some_certified || (agrees && covers_rows);
  }
  if (all_refuted) return Tri::FailsAtStage;
  if (some_certified) return Tri::HoldsAtStage;
  return Tri::InsufficientData;
}

}  // namespace idealis::countable
