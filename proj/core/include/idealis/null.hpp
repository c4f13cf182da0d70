#pragma once

// G_δ universal set for null subsets of 2^ω. A parameter f codes, for each
// n, a sequence of clopen sets of measure < 2^-n through the enumeration
// C^n; the section is ⋂_n ⋃_{k>n} of the guarded terms.

#include "idealis/space.hpp"
#include "idealis/tri.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace idealis::null {

/// covers[n] lists the clopen sets V^n_k of the n-th cover.
struct CoverFamily {
  std::vector<std::vector<Clopen>> covers;
};

/// Throws InvariantViolated(n) unless Σ_k measure(V^n_k) < 2^-(n+1) for every n.
void validate(const CoverFamily& X);

struct NullParam {
  BairePrefix prefix;
  /// witness[n] is a stage bound K_n > n sufficient for row n.
  std::vector<std::size_t> witness;
  /// Declares every matrix cell beyond the prefix to be 0, so the available
  /// rows are final and emptiness of a stage can refute membership.
  bool exhausted = false;

  friend bool operator==(const NullParam&, const NullParam&) = default;
};

/// The k-th term of row n after the measure guard. Requires k > n.
Clopen null_term(const NullParam& f, std::size_t n, std::size_t k);

/// ⋃_{n<k<=K} null_term(f, n, k). Requires K > n.
Clopen null_stage(const NullParam& f, std::size_t n, std::size_t K);

/// Stage membership of z in G_f for rows n <= N, reading row n up to the
/// witness bound K_n (n + 1 past the witness list of an exhausted f).
///
/// HoldsAtStage when [z] ⊆ null_stage(f, n, K_n) for every n <= N.
/// FailsAtStage when f is exhausted and [z] misses the whole available row n
/// for some n <= N. InsufficientData otherwise.
Tri null_member(const NullParam& f, const BitPrefix& z, std::size_t N);

/// As above with explicit stage bounds bounds[n] for n <= N.
Tri null_member(const NullParam& f, const BitPrefix& z, std::size_t N, std::span<const std::size_t> bounds);

/// Intermediate objects of the encoder.
struct EncodeTrace {
  std::vector<Clopen> flat;      // W_0, W_1, ...; ∅ beyond
  std::vector<Dyadic> tail;      // tail[k] = Σ_{j>k} measure(W_j)
  std::vector<std::size_t> cut;  // a_0, a_1, ..., up to the first a_m >= |flat|
  std::vector<Clopen> blocks;    // W̄_m = ⋃_{a_m <= j < a_{m+1}} W_j
};

EncodeTrace null_encode_trace(const CoverFamily& X);

/// Throws InvariantViolated when the family violates its measure bound.
NullParam null_encode(const CoverFamily& X);

}  // namespace idealis::null
