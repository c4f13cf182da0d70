#include "idealis/null.hpp"

#include "idealis/enumeration.hpp"

#include <algorithm>
#include <string>

namespace idealis::null {

namespace {

// Two empty sets precede every cover so that cover n+1 starts after the cut
// a_{n+1}; see null_encode_trace.
constexpr std::size_t kPadding = 2;

std::vector<Clopen> guarded_terms(const NullParam& f, std::size_t n, std::size_t K) {
  if (K <= n) {
    throw Error(ErrorKind::IndexOutOfRange, "stage bound must exceed row index", Nat(K));
  }
  const Dyadic budget = Dyadic::pow2_neg(n);
  Dyadic used;
  std::vector<Clopen> terms;
  terms.reserve(K - n);
  for (std::size_t k = n + 1; k <= K; ++k) {
    // Cells past an exhausted prefix are 0, which names ∅.
    if (f.exhausted && pair_index(n, k) >= f.prefix.size()) {
      terms.emplace_back();
      continue;
    }
    Clopen c = enumeration::clopen_enum(static_cast<unsigned>(n), matrix_entry(f.prefix, n, k));
    const Dyadic next = used + measure(c);
    if (next < budget) {
      used = next;
      terms.push_back(std::move(c));
    } else {
      terms.emplace_back();
    }
  }
  return terms;
}

}  // namespace

void validate(const CoverFamily& X) {
  for (std::size_t n = 0; n < X.covers.size(); ++n) {
    Dyadic total;
    for (const auto& V : X.covers[n]) total += measure(V);
    if (!(total < Dyadic::pow2_neg(n + 1))) {
      throw Error(ErrorKind::InvariantViolated,
                  "cover " + std::to_string(n) + " has measure " + total.str(), Nat(n));
    }
  }
}

Clopen null_term(const NullParam& f, std::size_t n, std::size_t k) {
  return guarded_terms(f, n, k).back();
}

Clopen null_stage(const NullParam& f, std::size_t n, std::size_t K) {
  Clopen stage;
  for (const auto& term : guarded_terms(f, n, K)) stage = unite(stage, term);
  return stage;
}

Tri null_member(const NullParam& f, const BitPrefix& z, std::size_t N) {
  if (f.witness.size() > N) return null_member(f, z, N, std::span(f.witness).first(N + 1));
  if (!f.exhausted) throw_insufficient_prefix(Nat(N) + 1, "null_member witness bounds");
  // Rows past the witness list of an exhausted parameter are all 0.
  std::vector<std::size_t> bounds(f.witness);
  for (std::size_t n = bounds.size(); n <= N; ++n) bounds.push_back(n + 1);
  return null_member(f, z, N, bounds);
}

Tri null_member(const NullParam& f, const BitPrefix& z, std::size_t N, std::span<const std::size_t> bounds) {
  if (bounds.size() <= N) throw_insufficient_prefix(Nat(N) + 1, "null_member stage bounds");
  bool covered = true;
  bool refuted = false;
  for (std::size_t n = 0; n <= N; ++n) {
    covered = covered && null_stage(f, n, bounds[n]).contains_cylinder(z);
    if (f.exhausted && !refuted) {
      const std::size_t avail = matrix_row_length(f.prefix, n);
      const bool empty_row = avail <= n + 1;
      refuted = empty_row || !null_stage(f, n, avail - 1).meets_cylinder(z);
    }
  }
  if (covered) return Tri::HoldsAtStage;
  if (refuted) return Tri::FailsAtStage;
  return Tri::InsufficientData;
}

EncodeTrace null_encode_trace(const CoverFamily& X) {
  validate(X);
  EncodeTrace t;
  for (const auto& cover : X.covers) {
    t.flat.insert(t.flat.end(), kPadding, Clopen());
    if (cover.empty()) {
      t.flat.emplace_back();
    } else {
      t.flat.insert(t.flat.end(), cover.begin(), cover.end());
    }
  }
  const std::size_t M = t.flat.size();
  t.tail.assign(M, Dyadic());
  for (std::size_t k = M; k-- > 1;) t.tail[k - 1] = t.tail[k] + measure(t.flat[k]);

  auto tail_at = [&](std::size_t k) { return k < M ? t.tail[k] : Dyadic(); };
  t.cut.push_back(0);
  for (std::uint64_t m = 1; t.cut.back() < M; ++m) {
    std::size_t k = t.cut.back() + 1;
    while (!(tail_at(k) < Dyadic::pow2_neg(m))) ++k;
    t.cut.push_back(k + 1);
  }
  for (std::size_t m = 0; m + 1 < t.cut.size(); ++m) {
    Clopen block;
    for (std::size_t j = t.cut[m]; j < t.cut[m + 1] && j < M; ++j) block = unite(block, t.flat[j]);
    t.blocks.push_back(std::move(block));
  }
  return t;
}

NullParam null_encode(const CoverFamily& X) {
  const EncodeTrace t = null_encode_trace(X);
  const std::size_t M = t.flat.size();
  const std::size_t levels = X.covers.size();

  std::size_t last_nonempty = 0;
  for (std::size_t k = 0; k < M; ++k) {
    if (!t.flat[k].is_empty()) last_nonempty = k;
  }

  NullParam f;
  f.exhausted = true;
  // Rows n with a_{n+1} < M carry terms; rows up to the family's depth get a witness.
  std::size_t rows = std::max<std::size_t>(levels, 1);
  while (rows + 1 < t.cut.size() && t.cut[rows + 1] < M) ++rows;

  std::vector<BairePrefix> g(rows);
  for (std::size_t n = 0; n < rows; ++n) {
    const std::size_t K = std::max(n + 1, last_nonempty);
    std::vector<Nat> row(K + 1, Nat(0));
    const std::size_t from = n + 1 < t.cut.size() ? t.cut[n + 1] : M;
    for (std::size_t k = from; k < M && k <= K; ++k) {
      row[k] = enumeration::clopen_rank(static_cast<unsigned>(n), t.flat[k]);
    }
    g[n] = BairePrefix(std::move(row));
    f.witness.push_back(K);
  }
  f.prefix = matrix_pack(g);
  return f;
}

}  // namespace idealis::null
