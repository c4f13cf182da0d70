#include "idealis/countable.hpp"
#include "idealis/e_ideal.hpp"
#include "idealis/enumeration.hpp"
#include "idealis/error.hpp"
#include "idealis/meager.hpp"
#include "idealis/null.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <optional>
#include <string>

namespace idealis {
namespace {

std::optional<Nat> error_value(ErrorKind kind, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    if (e.kind() == kind) return e.value() ? *e.value() : Nat(-1);
    ADD_FAILURE() << "unexpected " << e.name();
  }
  return std::nullopt;
}

Clopen cyl(const char* w) { return Clopen::cylinder(BitWord::parse(w)); }
BitWord zeros(std::size_t n) { return BitWord::parse(std::string(n, '0')); }

// --- countable ---------------------------------------------------------------

TEST(Countable, EmptyListIsTheZeroRow) {
  const auto y = countable::countable_encode({}, 4);
  EXPECT_EQ(countable::countable_member(y, BairePrefix{0, 0, 0, 0}, 1, 4), Tri::HoldsAtStage);
  EXPECT_EQ(countable::countable_member(y, BairePrefix{0, 0, 0, 1}, 1, 4), Tri::FailsAtStage);
}

TEST(Countable, RowsRoundTrip) {
  const std::vector<BairePrefix> points{{3, 1, 4, 1}, {2, 7, 1, 8}};
  const auto y = countable::countable_encode(points, 4);
  for (std::size_t n = 0; n < 2; ++n) {
    for (std::size_t m = 0; m < 4; ++m) EXPECT_EQ(matrix_entry(y.prefix, n, m), points[n][m]);
    EXPECT_EQ(countable::countable_member(y, points[n], 2, 4), Tri::HoldsAtStage);
  }
  EXPECT_EQ(countable::countable_member(y, BairePrefix{5, 1, 4, 1}, 2, 1), Tri::FailsAtStage);
  // Agreement on a short window does not yet certify membership.
  EXPECT_EQ(countable::countable_member(y, BairePrefix{3, 1, 4, 9}, 2, 2), Tri::InsufficientData);
}

TEST(Countable, DepthBeyondPrefix) {
  const std::vector<BairePrefix> points{{1, 2}};
  const auto y = countable::countable_encode(points, 2);
  EXPECT_TRUE(error_value(ErrorKind::InsufficientPrefix,
                          [&] { (void)countable::countable_member(y, BairePrefix{1, 2, 3}, 1, 3); }));
}

// --- meager ------------------------------------------------------------------

TEST(Partition, FromY) {
  using meager::Interval;
  EXPECT_EQ(meager::partition_from(BairePrefix{0, 0, 0}).intervals,
            (std::vector<Interval>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(meager::partition_from(BairePrefix{2, 3}).intervals, (std::vector<Interval>{{0, 3}, {3, 7}}));
  EXPECT_TRUE(meager::partition_from(BairePrefix{}).intervals.empty());
}

TEST(Fxp, BlockComparison) {
  const auto P = meager::partition_from(BairePrefix{2, 3});
  const BitWord x = BitWord::parse("0110100");
  EXPECT_EQ(meager::fxp_eval(x, P, x, 0), Tri::FailsAtStage);
  const BitWord flipped = BitWord::parse("1001011");
  EXPECT_EQ(meager::fxp_eval(x, P, flipped, 0), Tri::HoldsAtStage);
  EXPECT_EQ(meager::fxp_eval(x, P, flipped, 1), Tri::HoldsAtStage);
  const BitWord head_only = BitWord::parse("0111011");
  EXPECT_EQ(meager::fxp_eval(x, P, head_only, 0), Tri::FailsAtStage);
  EXPECT_EQ(meager::fxp_eval(x, P, head_only, 1), Tri::HoldsAtStage);
  // Block 1 is cut off: nothing decided past block 0.
  EXPECT_EQ(meager::fxp_eval(BitWord::parse("01101"), P, BitWord::parse("10010"), 0), Tri::InsufficientData);
  EXPECT_TRUE(error_value(ErrorKind::InsufficientPrefix, [&] { (void)meager::fxp_eval(x, P, x, 2); }));
}

TEST(DenseOpen, FirstStageIsWhole) {
  const meager::DenseOpenParam x{BairePrefix{0, 0}};
  EXPECT_TRUE(meager::dense_section_stage(x, 1).is_whole());
}

TEST(DenseOpen, Encode) {
  const auto p = meager::dense_open_encode(Clopen::whole(), 5);
  EXPECT_TRUE(subset(meager::dense_section_stage(p, 5), Clopen::whole()));
  // U_3 = [1] misses [0].
  EXPECT_EQ(error_value(ErrorKind::NotDense, [] { (void)meager::dense_open_encode(cyl("0"), 3); }), Nat(3));
}

TEST(Meager, Sections) {
  const BitWord z = zeros(5);
  const meager::MeagerParam none = meager::meager_encode({}, 3);
  EXPECT_EQ(meager::meager_eval(none, z, 0, 3), Tri::FailsAtStage);
  EXPECT_EQ(meager::meager_eval(none, z, none.rows, 3), Tri::FailsAtStage);

  // W avoids [00000] yet meets U_1..U_3; its stage is [1] ∪ [01].
  const std::vector<Clopen> dense{complement(cyl("00000"))};
  const auto p = meager::meager_encode(dense, 3);
  EXPECT_EQ(meager::meager_eval(p, z, 1, 3), Tri::HoldsAtStage);
  EXPECT_EQ(meager::meager_eval(p, BitWord::parse("1"), 1, 3), Tri::FailsAtStage);
  EXPECT_EQ(meager::meager_eval(p, BitWord::parse("0"), 1, 3), Tri::InsufficientData);
}

// --- null --------------------------------------------------------------------

TEST(Null, ValidateRejectsHeavyCovers) {
  null::CoverFamily X{{{cyl("00")}, {cyl("0")}}};
  EXPECT_EQ(error_value(ErrorKind::InvariantViolated, [&] { null::validate(X); }), Nat(1));
  EXPECT_TRUE(error_value(ErrorKind::InvariantViolated, [&] { (void)null::null_encode(X); }));
}

TEST(Null, EmptyFamily) {
  const auto f = null::null_encode({});
  for (std::size_t n = 0; n < 3; ++n) EXPECT_TRUE(null::null_stage(f, n, n + 4).is_empty());
  EXPECT_EQ(null::null_member(f, zeros(4), 1), Tri::FailsAtStage);
  const null::NullParam open{BairePrefix(std::vector<Nat>(10, Nat(0))), {1, 2}, false};
  EXPECT_EQ(null::null_member(open, zeros(4), 1), Tri::InsufficientData);
}

TEST(Null, ZeroTermsAreEmpty) {
  const null::NullParam f{BairePrefix(std::vector<Nat>(40, Nat(0))), {1, 2, 3}, false};
  for (std::size_t n = 0; n < 3; ++n) {
    for (std::size_t k = n + 1; k < 4; ++k) EXPECT_TRUE(null::null_term(f, n, k).is_empty());
  }
}

TEST(Null, GuardDropsOverflowingTerm) {
  // Row 0 raw terms [0] and [1]: the second would take the union to measure 1.
  std::vector<BairePrefix> rows{
      BairePrefix{Nat(0), enumeration::clopen_rank(0, cyl("00")), enumeration::clopen_rank(0, cyl("01")), enumeration::clopen_rank(0, cyl("1"))}};
  const null::NullParam f{matrix_pack(rows), {3}, false};
  EXPECT_EQ(null::null_term(f, 0, 1), cyl("00"));
  EXPECT_EQ(null::null_term(f, 0, 2), cyl("01"));
  EXPECT_TRUE(null::null_term(f, 0, 3).is_empty());
  EXPECT_LT(measure(null::null_stage(f, 0, 3)), Dyadic::one());
}

TEST(Null, PointZeroRoundTrip) {
  null::CoverFamily X;
  for (std::size_t n = 0; n <= 6; ++n) X.covers.push_back({Clopen::cylinder(zeros(n + 2))});
  const auto f = null::null_encode(X);
  for (std::size_t N = 0; N <= 6; ++N) EXPECT_EQ(null::null_member(f, zeros(10), N), Tri::HoldsAtStage) << N;
  EXPECT_EQ(null::null_member(f, BitWord::parse("1"), 0), Tri::FailsAtStage);
}

// --- E -----------------------------------------------------------------------

TEST(ETerm, LevelOneExample) {
  const e::ETripleParam p{BairePrefix{0, 0}, BairePrefix{0, 1}, BairePrefix{0, 0}};
  const auto s = e::e_term_shape(p, 1);
  EXPECT_EQ(s.m, 1u);
  EXPECT_EQ(s.L, 1u);
  EXPECT_EQ(s.t, 1u);
  EXPECT_EQ(s.l, Nat(0));
  EXPECT_EQ(e::e_term(p, 1), cyl("0"));
  EXPECT_EQ(measure(e::e_term(p, 1)), Dyadic(1, 1));
}

TEST(ETerm, DegenerateFirstTerm) {
  const e::ETripleParam p{BairePrefix{0}, BairePrefix{3}, BairePrefix{0}};
  EXPECT_TRUE(e::e_open_stage(p, 0).is_empty());
}

TEST(ETriple, PackRoundTrip) {
  const e::ETripleParam p{BairePrefix{1, 2, 3}, BairePrefix{4, 5, 6}, BairePrefix{7, 8, 9}};
  // Rows come back padded with the zero cells of the covering prefix.
  const auto q = e::decode_triple(e::pack_triple(p));
  const BairePrefix* in[] = {&p.x0, &p.x1, &p.x2};
  const BairePrefix* out[] = {&q.x0, &q.x1, &q.x2};
  for (std::size_t r = 0; r < 3; ++r) {
    ASSERT_GE(out[r]->size(), 3u);
    for (std::size_t k = 0; k < out[r]->size(); ++k) EXPECT_EQ((*out[r])[k], k < 3 ? (*in[r])[k] : Nat(0));
  }
}

TEST(EOpen, Encode) {
  const auto whole = e::e_open_encode(Clopen::whole(), 3);
  EXPECT_TRUE(subset(e::e_open_stage(whole, 3), Clopen::whole()));

  const Clopen punctured = complement(cyl("00000"));
  for (std::size_t m_max = 0; m_max <= 4; ++m_max) {
    const auto p = e::e_open_encode(punctured, m_max);
    const Clopen stage = e::e_open_stage(p, m_max);
    EXPECT_TRUE(subset(stage, punctured));
    EXPECT_GE(measure(stage), Dyadic::one() - Dyadic::pow2_neg(m_max + 1));
  }
  EXPECT_EQ(error_value(ErrorKind::InsufficientResolution, [&] { (void)e::e_open_encode(punctured, 5); }), Nat(5));
  EXPECT_EQ(error_value(ErrorKind::InsufficientResolution, [] { (void)e::e_open_encode(cyl("0"), 2); }), Nat(1));
}

TEST(EFsigma, Sections) {
  const auto none = e::e_encode({}, 2);
  EXPECT_EQ(e::e_fsigma_member(none, zeros(3), 0, 2), Tri::FailsAtStage);

  const std::vector<Clopen> opens{complement(cyl("00000"))};
  const auto p = e::e_encode(opens, 3);
  EXPECT_EQ(e::e_fsigma_member(p, zeros(5), 1, 3), Tri::HoldsAtStage);
  // Term 0 is [01] ∪ [10]; each later term also misses the all-ones cylinder.
  EXPECT_EQ(e::e_fsigma_member(p, BitWord::parse("01"), 1, 3), Tri::FailsAtStage);
  EXPECT_EQ(e::e_fsigma_member(p, BitWord::parse("1"), 1, 3), Tri::InsufficientData);
}

}  // namespace
}  // namespace idealis
