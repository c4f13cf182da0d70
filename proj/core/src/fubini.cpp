#include "idealis/fubini.hpp"

#include <algorithm>
#include <stdexcept>

namespace idealis::fubini {

std::string_view to_string(Variant v) { return v == Variant::NullMeager ? "nm" : "mn"; }

Variant parse_variant(std::string_view text) {
  if (text == "nm") return Variant::NullMeager;
  if (text == "mn") return Variant::MeagerNull;
  throw std::invalid_argument("variant must be nm or mn");
}

BitPrefix interleave(const ProductPoint& p) {
  if (p.y.size() != p.z.size()) {
    throw Error(ErrorKind::LengthMismatch, "product point coordinates differ in length", Nat(p.z.size()));
  }
  BitPrefix w;
  for (std::size_t i = 0; i < p.y.size(); ++i) {
    w.push_back(p.y[i]);
    w.push_back(p.z[i]);
  }
  return w;
}

ProductPoint deinterleave(const BitPrefix& w) {
  if (w.size() % 2 != 0) throw Error(ErrorKind::LengthMismatch, "odd interleaved length", Nat(w.size()));
  ProductPoint p;
  for (std::size_t i = 0; i < w.size(); i += 2) {
    p.y.push_back(w[i]);
    p.z.push_back(w[i + 1]);
  }
  return p;
}

namespace {

Tri null_side(const null::NullParam& f, const BitPrefix& point, const Stages& s) {
  if (f.witness.empty() && !s.null_levels) throw_insufficient_prefix(Nat(1), "product null witness");
  const std::size_t N = s.null_levels.value_or(f.witness.size() - 1);
  if (s.null_bounds) return null::null_member(f, point, N, *s.null_bounds);
  return null::null_member(f, point, N);
}

Tri meager_side(const meager::MeagerParam& p, const BitPrefix& point, const Stages& s) {
  return meager::meager_eval(p, point, s.meager_rows.value_or(p.rows), s.meager_n_max.value_or(p.n_max));
}

}  // namespace

Tri product_member(const ProductParam& pp, const ProductPoint& p, const Stages& stages) {
  const BitPrefix plane = interleave(p);
  if (pp.variant == Variant::NullMeager) {
    return tri_or(null_side(pp.null_part, p.y, stages), meager_side(pp.meager_part, plane, stages));
  }
  return tri_or(meager_side(pp.meager_part, p.y, stages), null_side(pp.null_part, plane, stages));
}

ProductParam product_encode(Variant variant, const ProductInput& input) {
  return {variant, null::null_encode(input.covers), meager::meager_encode(input.dense, input.n_max)};
}

Mask section_diagnostic(const Mask& B, unsigned d, const Proxy& proxy) {
  check_level(d);
  const std::size_t side = std::size_t{1} << d;
  if (B.size() != side * side) throw std::invalid_argument("diagnostic bitset must have 4^d bits");
  if (proxy.kind == Proxy::Kind::Nwd && proxy.split > d) {
    throw std::invalid_argument("split exceeds the grid level");
  }
  Mask flagged(side);
  for (std::size_t x = 0; x < side; ++x) {
    if (proxy.kind == Proxy::Kind::Null) {
      std::size_t count = 0;
      for (std::size_t y = 0; y < side; ++y) count += B[x * side + y];
      flagged[x] = !(Dyadic(Nat(count), d) < proxy.epsilon);
    } else {
      const std::size_t cells = std::size_t{1} << proxy.split;
      Mask met(cells);
      for (std::size_t y = 0; y < side; ++y) {
        if (B[x * side + y]) met.set(y >> (d - proxy.split));
      }
      flagged[x] = met.all();
    }
  }
  return flagged;
}

std::string BorelClass::str() const {
  return std::string(sigma ? "Sigma" : "Pi") + "^0_" + std::to_string(level);
}

BorelClass classify(const Shape& s) {
  using Op = Shape::Op;
  switch (s.op) {
    case Op::Open: return {true, 1};
    case Op::Closed: return {false, 1};
    case Op::TimesWhole: return classify(s.children.at(0));
    case Op::Union:
    case Op::Intersection: {
      const bool sigma = s.op == Op::Union;
      unsigned level = 1;
      for (const auto& c : s.children) {
        const BorelClass k = classify(c);
        level = std::max(level, k.sigma == sigma ? k.level : k.level + 1);
      }
      return {sigma, level};
    }
  }
  return {};
}

unsigned quantifier_depth(const Shape& s) {
  unsigned below = 0;
  for (const auto& c : s.children) below = std::max(below, quantifier_depth(c));
  const bool counts = s.op == Shape::Op::Union || s.op == Shape::Op::Intersection;
  return below + (counts ? 1 : 0);
}

Shape section_shape(Variant v) {
  using Op = Shape::Op;
  // G_δ null factor: ⋂_n ⋃_{k>n} of guarded clopen terms.
  Shape null_gdelta{Op::Intersection, "null rows n", {Shape{Op::Union, "terms k > n", {Shape{Op::Open, "guarded term", {}}}}}};
  // F_σ meager set: ⋃_r of the complement of row r's dense open union.
  Shape meager_fsigma{Op::Union, "rows r", {Shape{Op::Intersection, "complement of stage union", {Shape{Op::Closed, "complement of U_kprime", {}}}}}};
  // Plane components on the interleaved point are themselves the same shapes.
  if (v == Variant::NullMeager) {
    return {Op::Union, "product", {Shape{Op::TimesWhole, "G x X", {null_gdelta}}, meager_fsigma}};
  }
  return {Op::Union, "product", {Shape{Op::TimesWhole, "F x X", {meager_fsigma}}, null_gdelta}};
}

}  // namespace idealis::fubini
