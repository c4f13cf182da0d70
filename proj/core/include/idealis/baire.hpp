#pragma once

// Universal sets on ω^ω: the eventual-domination relation for K_σ and the
// Laver ideal's sets D_Φ coded through sequence numbers.

#include "idealis/space.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace idealis::baire {

struct KsigmaParam {
  BairePrefix bound;

  friend bool operator==(const KsigmaParam&, const KsigmaParam&) = default;
};

/// x(m) <= y(m) for all n < m < L, L the shorter length. Throws
/// InsufficientPrefix(n + 2) when L <= n + 1.
bool dominated_from(const KsigmaParam& y, const BairePrefix& x, std::size_t n);

/// Pointwise maximum. All points must share one length (LengthMismatch);
/// `length` sets the bound's length for an empty list and is checked
/// against the points otherwise.
KsigmaParam ksigma_encode(std::span<const BairePrefix> points, std::optional<std::size_t> length = std::nullopt);

/// g(m) = y(m) + 1.
BairePrefix ksigma_diagonal(const KsigmaParam& y);

/// Φ(s) = value(seq_code(s)), stored sparsely: `length` cells of which only
/// the nonzero ones are kept.
struct LaverParam {
  Nat length = 0;
  std::map<Nat, Nat> cells;
  /// Declares Φ = 0 on every code at or beyond `length`.
  bool exhausted = false;

  /// Throws InsufficientPrefix(code + 1) when the code is not covered.
  Nat value(const Nat& code) const;
  Nat phi(std::span<const Nat> seq) const { return value(seq_code(seq)); }

  friend bool operator==(const LaverParam&, const LaverParam&) = default;
};

using PhiMap = std::map<std::vector<Nat>, Nat>;

/// Covers every domain code; Φ is 0 elsewhere.
LaverParam laver_encode(const PhiMap& phi);

/// |{n in [n0, n1) : f(n) < Φ(f|n)}|. Throws InsufficientPrefix(n1) when f
/// is shorter than n1.
std::size_t laver_witnesses(const LaverParam& p, const BairePrefix& f, std::size_t n0, std::size_t n1);

}  // namespace idealis::baire
