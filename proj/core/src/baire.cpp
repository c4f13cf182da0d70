#include "idealis/baire.hpp"

#include <algorithm>

namespace idealis::baire {

bool dominated_from(const KsigmaParam& y, const BairePrefix& x, std::size_t n) {
  const std::size_t L = std::min(x.size(), y.bound.size());
  if (L <= n + 1) throw_insufficient_prefix(Nat(n) + 2, "dominated_from");
  for (std::size_t m = n + 1; m < L; ++m) {
    if (x[m] > y.bound[m]) return false;
  }
  return true;
}

KsigmaParam ksigma_encode(std::span<const BairePrefix> points, std::optional<std::size_t> length) {
  const std::size_t L = length ? *length : points.empty() ? 0 : points.front().size();
  std::vector<Nat> bound(L, Nat(0));
  for (const auto& p : points) {
    if (p.size() != L) {
      throw Error(ErrorKind::LengthMismatch, "ksigma_encode points differ in length", Nat(p.size()));
    }
    for (std::size_t m = 0; m < L; ++m) bound[m] = std::max(bound[m], p[m]);
  }
  return {BairePrefix(std::move(bound))};
}

BairePrefix ksigma_diagonal(const KsigmaParam& y) {
  BairePrefix g;
  for (const auto& v : y.bound.entries()) g.push_back(v + 1);
  return g;
}

Nat LaverParam::value(const Nat& code) const {
  if (code >= length && !exhausted) throw_insufficient_prefix(code + 1, "laver parameter");
  const auto it = cells.find(code);
  return it == cells.end() ? Nat(0) : it->second;
}

LaverParam laver_encode(const PhiMap& phi) {
  LaverParam p;
  p.exhausted = true;
  for (const auto& [seq, val] : phi) {
    const Nat code = seq_code(seq);
    if (code >= p.length) p.length = code + 1;
    if (val != 0) p.cells[code] = val;
  }
  return p;
}

std::size_t laver_witnesses(const LaverParam& p, const BairePrefix& f, std::size_t n0, std::size_t n1) {
  if (f.size() < n1) throw_insufficient_prefix(Nat(n1), "laver_witnesses point");
  std::size_t count = 0;
  Nat code = 0;  // seq_code(f|n), built incrementally
  for (std::size_t n = 0; n < n1; ++n) {
    if (n >= n0 && f[n] < p.value(code)) ++count;
    code = pair(code, f[n]) + 1;
  }
  return count;
}

}  // namespace idealis::baire
