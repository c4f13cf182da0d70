#pragma once

// Universal sets for the σ-ideal E generated by closed null sets, through
// the complement: open sets of full measure, their G_δ intersections, and the
// complementary F_σ sections.

#include "idealis/space.hpp"
#include "idealis/tri.hpp"

#include <cstddef>
#include <span>

namespace idealis::e {

/// Three Baire prefixes; as one prefix they are matrix rows 0, 1, 2.
struct ETripleParam {
  BairePrefix x0, x1, x2;

  friend bool operator==(const ETripleParam&, const ETripleParam&) = default;
};

ETripleParam decode_triple(const BairePrefix& packed);
BairePrefix pack_triple(const ETripleParam& p);

/// Rows of packed triples. `n_max` is the stage each row was written for.
struct EParam {
  BairePrefix prefix;
  std::size_t rows = 0;
  std::size_t n_max = 0;

  friend bool operator==(const EParam&, const EParam&) = default;
};

struct TermShape {
  std::size_t m = 0;  // x0(n) + n
  std::size_t L = 0;  // working level max(x1(n), m)
  std::size_t t = 0;  // number of level-L cylinders, 2^L - 2^(L-m)
  Nat l;              // x2(n) mod C(2^L, t)
};

TermShape e_term_shape(const ETripleParam& p, std::size_t n);

/// Union of the t level-L cylinders picked by the l-th t-subset of {0,1}^L.
/// Its measure is exactly 1 - 2^-m.
Clopen e_term(const ETripleParam& p, std::size_t n);

/// ⋃_{n<=n_max} e_term(p, n).
Clopen e_open_stage(const ETripleParam& p, std::size_t n_max);

/// Writes term m <= m_max with x0(m) = 1, so its measure is 1 - 2^-(m+1);
/// x1(m) is the least level L > m+1 at which V holds at least that many
/// level-L cylinders and x2(m) ranks the lexicographically first of them.
/// The stage then lies inside V with measure >= 1 - 2^-(m_max+1).
/// Throws InsufficientResolution(m).
ETripleParam e_open_encode(const Clopen& V, std::size_t m_max);

ETripleParam e_row(const EParam& p, std::size_t r);

/// Stage membership of z in the E-section (the complement of the
/// intersection of the row stages); same certificate rules as meager_eval.
Tri e_fsigma_member(const EParam& p, const BitPrefix& z, std::size_t rows, std::size_t n_max);

EParam e_encode(std::span<const Clopen> opens, std::size_t m_max);

}  // namespace idealis::e
