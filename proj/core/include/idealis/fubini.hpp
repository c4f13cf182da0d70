#pragma once

// Σ⁰₃ universal sets for the Fubini products N⊗M and M⊗N, assembled from a
// factor parameter on the first coordinate and a planar parameter on the
// interleaved plane. Also a finite section diagnostic on 2^d × 2^d grids.

#include "idealis/meager.hpp"
#include "idealis/null.hpp"
#include "idealis/space.hpp"
#include "idealis/tri.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace idealis::fubini {

/// NullMeager is N⊗M: a null G_δ factor G on y and a meager F_σ set F on the
/// plane. MeagerNull mirrors it.
enum class Variant { NullMeager, MeagerNull };

std::string_view to_string(Variant v);  // "nm" / "mn"
Variant parse_variant(std::string_view text);  // throws std::invalid_argument

/// Plane ≅ 2^ω by bit interleaving y(0) z(0) y(1) z(1) ...
inline constexpr std::string_view kIdentification = "interleave";

struct ProductPoint {
  BitPrefix y, z;
};

/// Throws LengthMismatch when y and z differ in length.
BitPrefix interleave(const ProductPoint& p);
/// Throws LengthMismatch on odd length.
ProductPoint deinterleave(const BitPrefix& w);

struct ProductParam {
  Variant variant = Variant::NullMeager;
  null::NullParam null_part;
  meager::MeagerParam meager_part;

  friend bool operator==(const ProductParam&, const ProductParam&) = default;
};

/// Stage arguments for both components. Unset fields default to what the
/// parameter declares.
struct Stages {
  std::optional<std::size_t> null_levels;
  std::optional<std::vector<std::size_t>> null_bounds;
  std::optional<std::size_t> meager_rows;
  std::optional<std::size_t> meager_n_max;
};

/// Kleene disjunction of the factor answer (on y) and the planar answer (on
/// the interleaved point).
Tri product_member(const ProductParam& pp, const ProductPoint& p, const Stages& stages = {});

/// Components of a product section: null covers and dense open sets (with
/// their stage). Which coordinate each acts on follows the variant.
struct ProductInput {
  null::CoverFamily covers;
  std::vector<Clopen> dense;
  std::size_t n_max = 0;
};

ProductParam product_encode(Variant variant, const ProductInput& input);

struct Proxy {
  enum class Kind { Null, Nwd };
  Kind kind = Kind::Null;
  Dyadic epsilon;         // Null: flag when section density >= epsilon
  std::size_t split = 0;  // Nwd: flag when the section meets every level-split cylinder
};

/// B is row-major over 2^d × 2^d (bit x·2^d + y). Returns the words x whose
/// section {y : (x, y) ∈ B} fails the proxy.
Mask section_diagnostic(const Mask& B, unsigned d, const Proxy& proxy);

// --- Borel shape of the evaluator ------------------------------------------

/// Syntax tree of a set built from clopen-approximated open/closed sets by
/// countable unions and intersections and products with a whole factor.
struct Shape {
  enum class Op { Open, Closed, Union, Intersection, TimesWhole };
  Op op = Op::Open;
  std::string label;
  std::vector<Shape> children;
};

struct BorelClass {
  bool sigma = true;
  unsigned level = 1;

  std::string str() const;  // e.g. "Sigma^0_3"
  friend bool operator==(const BorelClass&, const BorelClass&) = default;
};

/// Least Σ/Π class guaranteed by the syntax.
BorelClass classify(const Shape& s);

/// Nesting depth of Union/Intersection nodes.
unsigned quantifier_depth(const Shape& s);

/// The shape product_member evaluates for the given variant.
Shape section_shape(Variant v);

}  // namespace idealis::fubini
