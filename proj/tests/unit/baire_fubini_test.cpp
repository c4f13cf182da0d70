#include "idealis/baire.hpp"
#include "idealis/error.hpp"
#include "idealis/fubini.hpp"

#include <gtest/gtest.h>

#include <stdexcept>
#include <string>

namespace idealis {
namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::UnknownSuite;
}

Clopen cyl(const char* w) { return Clopen::cylinder(BitWord::parse(w)); }
BitWord zeros(std::size_t n) { return BitWord::parse(std::string(n, '0')); }

// --- K_sigma -----------------------------------------------------------------

TEST(Ksigma, DominatedFrom) {
  const BairePrefix y{4, 0, 2, 7, 1};
  for (std::size_t n = 0; n + 1 < y.size(); ++n) EXPECT_TRUE(baire::dominated_from({y}, y, n));
  const BairePrefix above{5, 1, 3, 8, 2};
  for (std::size_t n = 0; n + 1 < y.size(); ++n) EXPECT_FALSE(baire::dominated_from({y}, above, n));
  // Only coordinates m > n count.
  EXPECT_TRUE(baire::dominated_from({BairePrefix{0, 0, 0}}, BairePrefix{99, 0, 0}, 0));
  EXPECT_EQ(kind_of([&] { (void)baire::dominated_from({y}, y, 4); }), ErrorKind::InsufficientPrefix);
}

TEST(Ksigma, Encode) {
  EXPECT_EQ(baire::ksigma_encode({}, 3).bound, (BairePrefix{0, 0, 0}));
  const std::vector<BairePrefix> one{{3, 1, 4}};
  EXPECT_EQ(baire::ksigma_encode(one).bound, one[0]);
  const std::vector<BairePrefix> two{{3, 1, 4}, {1, 5, 9}};
  const auto p = baire::ksigma_encode(two);
  EXPECT_EQ(p.bound, (BairePrefix{3, 5, 9}));
  for (const auto& x : two) EXPECT_TRUE(baire::dominated_from(p, x, 0));
  const std::vector<BairePrefix> ragged{{1, 2}, {1}};
  EXPECT_EQ(kind_of([&] { (void)baire::ksigma_encode(ragged); }), ErrorKind::LengthMismatch);
  EXPECT_EQ(kind_of([&] { (void)baire::ksigma_encode(one, 5); }), ErrorKind::LengthMismatch);
}

TEST(Ksigma, DiagonalEscapes) {
  const baire::KsigmaParam zero{BairePrefix{0, 0, 0, 0}};
  const BairePrefix g = baire::ksigma_diagonal(zero);
  EXPECT_EQ(g, (BairePrefix{1, 1, 1, 1}));
  for (std::size_t n = 0; n + 1 < g.size(); ++n) EXPECT_FALSE(baire::dominated_from(zero, g, n));
  EXPECT_EQ(baire::ksigma_diagonal({BairePrefix{6}}), (BairePrefix{7}));
}

// --- Laver -------------------------------------------------------------------

TEST(Laver, Encode) {
  const auto empty = baire::laver_encode({});
  EXPECT_EQ(empty.length, Nat(0));
  EXPECT_TRUE(empty.exhausted);
  EXPECT_EQ(empty.phi(std::vector<Nat>{4, 2}), Nat(0));

  const auto p = baire::laver_encode({{std::vector<Nat>{}, Nat(5)}});
  EXPECT_EQ(p.value(0), Nat(5));
  EXPECT_EQ(p.length, Nat(1));
}

TEST(Laver, Witnesses) {
  const BairePrefix f{0, 3, 1, 0};
  EXPECT_EQ(baire::laver_witnesses(baire::laver_encode({}), f, 0, 4), 0u);

  baire::PhiMap one;
  for (std::size_t len = 0; len < 8; ++len) one[std::vector<Nat>(len, Nat(0))] = 1;
  const BairePrefix z(std::vector<Nat>(8, Nat(0)));
  EXPECT_EQ(baire::laver_witnesses(baire::laver_encode(one), z, 0, 8), 8u);
  EXPECT_EQ(baire::laver_witnesses(baire::laver_encode(one), z, 3, 8), 5u);
  EXPECT_EQ(kind_of([&] { (void)baire::laver_witnesses(baire::laver_encode(one), f, 0, 5); }),
            ErrorKind::InsufficientPrefix);
}

// --- Fubini products -----------------------------------------------------------

TEST(Plane, Interleave) {
  const fubini::ProductPoint p{BitWord::parse("01"), BitWord::parse("11")};
  EXPECT_EQ(fubini::interleave(p), BitWord::parse("0111"));
  const auto back = fubini::deinterleave(BitWord::parse("0111"));
  EXPECT_EQ(back.y, p.y);
  EXPECT_EQ(back.z, p.z);
  EXPECT_EQ(kind_of([] { (void)fubini::deinterleave(BitWord::parse("011")); }), ErrorKind::LengthMismatch);
  EXPECT_EQ(kind_of([] { (void)fubini::interleave({BitWord::parse("0"), BitWord::parse("")}); }),
            ErrorKind::LengthMismatch);
}

TEST(Plane, Variants) {
  EXPECT_EQ(fubini::parse_variant("nm"), fubini::Variant::NullMeager);
  EXPECT_EQ(fubini::parse_variant("mn"), fubini::Variant::MeagerNull);
  EXPECT_EQ(fubini::to_string(fubini::Variant::MeagerNull), "mn");
  EXPECT_THROW((void)fubini::parse_variant("nn"), std::invalid_argument);
}

TEST(Product, KleeneDisjunction) {
  fubini::ProductInput in;
  for (std::size_t n = 0; n <= 3; ++n) in.covers.covers.push_back({Clopen::cylinder(zeros(n + 2))});
  in.dense.push_back(complement(cyl("00000")));
  in.n_max = 3;
  const auto pp = fubini::product_encode(fubini::Variant::NullMeager, in);

  // y = 0^ω is covered by the null factor.
  EXPECT_EQ(fubini::product_member(pp, {zeros(8), zeros(8)}), Tri::HoldsAtStage);
  // y starts with 1, so the factor refutes; the plane point 10... sits in the stage [1].
  EXPECT_EQ(fubini::product_member(pp, {BitWord::parse("1"), BitWord::parse("0")}), Tri::FailsAtStage);
}

TEST(Product, SectionShapeIsSigma03) {
  for (auto v : {fubini::Variant::NullMeager, fubini::Variant::MeagerNull}) {
    const auto shape = fubini::section_shape(v);
    EXPECT_EQ(fubini::classify(shape).str(), "Sigma^0_3");
    EXPECT_EQ(fubini::quantifier_depth(shape), 3u);
  }
}

TEST(Diagnostic, Proxies) {
  // d = 2: section x = 0 is everything, x = 1 is {00, 10}, x = 2 is {00, 01}.
  Mask B(16);
  for (std::size_t y = 0; y < 4; ++y) B.set(0 * 4 + y);
  B.set(1 * 4 + 0);
  B.set(1 * 4 + 2);
  B.set(2 * 4 + 0);
  B.set(2 * 4 + 1);

  const fubini::Proxy dense{fubini::Proxy::Kind::Null, Dyadic(3, 2), 0};
  const Mask heavy = fubini::section_diagnostic(B, 2, dense);
  EXPECT_TRUE(heavy.test(0));
  EXPECT_FALSE(heavy.test(1));
  EXPECT_FALSE(heavy.test(3));

  const fubini::Proxy nwd{fubini::Proxy::Kind::Nwd, Dyadic::zero(), 1};
  const Mask spread = fubini::section_diagnostic(B, 2, nwd);
  EXPECT_TRUE(spread.test(0));
  EXPECT_TRUE(spread.test(1));
  EXPECT_FALSE(spread.test(2));
  EXPECT_FALSE(spread.test(3));
}

}  // namespace
}  // namespace idealis
