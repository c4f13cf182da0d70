#include "idealis/space.hpp"

#include <gtest/gtest.h>

namespace idealis {
namespace {

Clopen clopen(unsigned level, std::initializer_list<const char*> words) {
  std::vector<BitWord> ws;
  for (const char* w : words) ws.push_back(BitWord::parse(w));
  return canonicalize(level, ws);
}

TEST(Measure, CountsCylinders) {
  EXPECT_EQ(measure(Clopen::whole()), Dyadic::one());
  EXPECT_EQ(measure(clopen(3, {"010"})), Dyadic(1, 3));
  EXPECT_EQ(measure(clopen(2, {"00", "01", "10"})), Dyadic(3, 2));
  EXPECT_EQ(measure(Clopen::empty()), Dyadic::zero());
}

TEST(Canonicalize, MergesSiblings) {
  const Clopen c = clopen(1, {"0", "1"});
  EXPECT_TRUE(c.is_whole());
  EXPECT_EQ(c.level(), 0u);

  const Clopen d = clopen(2, {"00", "01", "10"});
  EXPECT_EQ(d.level(), 2u);
  EXPECT_EQ(d.word_count(), 3u);

  const Clopen e = clopen(2, {});
  EXPECT_TRUE(e.is_empty());
  EXPECT_EQ(e.level(), 0u);

  EXPECT_EQ(clopen(3, {"000", "001"}), clopen(2, {"00"}));
}

TEST(Algebra, LiftAndCombine) {
  const Clopen x = clopen(3, {"011", "101"});
  EXPECT_EQ(unite(Clopen::empty(), x), x);
  EXPECT_EQ(intersect(clopen(1, {"0"}), clopen(2, {"01", "10"})), clopen(2, {"01"}));
  EXPECT_TRUE(subset(clopen(2, {"00"}), clopen(1, {"0"})));
  EXPECT_FALSE(subset(clopen(1, {"0"}), clopen(2, {"00"})));
  EXPECT_EQ(complement(complement(x)), x);
  EXPECT_EQ(unite(x, complement(x)), Clopen::whole());
  EXPECT_TRUE(disjoint(x, complement(x)));
}

TEST(Algebra, CylinderQueries) {
  const Clopen c = clopen(2, {"01", "10"});
  EXPECT_TRUE(c.contains_cylinder(BitWord::parse("011")));
  EXPECT_FALSE(c.contains_cylinder(BitWord::parse("0")));
  EXPECT_TRUE(c.meets_cylinder(BitWord::parse("0")));
  EXPECT_FALSE(c.meets_cylinder(BitWord::parse("00")));
  EXPECT_FALSE(Clopen::empty().meets_cylinder(BitWord()));
  EXPECT_TRUE(Clopen::whole().contains_cylinder(BitWord()));
}

TEST(Dyadic, ExactArithmetic) {
  EXPECT_EQ(Dyadic(2, 3), Dyadic(1, 2));
  EXPECT_EQ(Dyadic(1, 2) + Dyadic(1, 2), Dyadic(1, 1));
  EXPECT_EQ(Dyadic::one() - Dyadic(1, 5), Dyadic(31, 5));
  EXPECT_LT(Dyadic(31, 5), Dyadic::one());
  EXPECT_EQ(Dyadic(3, 4).str(), "3/2^4");
}

TEST(Pairing, ClosedForm) {
  EXPECT_EQ(pair(0, 0), 0);
  EXPECT_EQ(pair(1, 0), 1);
  EXPECT_EQ(pair(0, 1), 2);
  for (int m = 0; m < 100; ++m) {
    for (int n = 0; n < 100; ++n) {
      const auto [a, b] = unpair(pair(m, n));
      ASSERT_EQ(a, m);
      ASSERT_EQ(b, n);
    }
  }
  for (int k = 0; k < 2000; ++k) {
    const auto [a, b] = unpair(k);
    ASSERT_EQ(pair(a, b), k);
  }
}

TEST(SequenceCode, Examples) {
  EXPECT_EQ(seq_code({}), 0);
  EXPECT_EQ(seq_decode(1), std::vector<Nat>{0});
  EXPECT_EQ(seq_decode(2), (std::vector<Nat>{0, 0}));
  for (int k = 0; k < 3000; ++k) ASSERT_EQ(seq_code(seq_decode(k)), k);
  const std::vector<Nat> s{3, 1, 4, 1, 5};
  EXPECT_EQ(seq_decode(seq_code(s)), s);
}

TEST(Matrix, EntryLayout) {
  const BairePrefix f{7, 8, 9};
  EXPECT_EQ(matrix_entry(f, 0, 0), 7);
  try {
    (void)matrix_entry(f, 1, 1);
    FAIL() << "expected InsufficientPrefix";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InsufficientPrefix);
    EXPECT_EQ(e.value(), Nat(5));
  }
  std::vector<Nat> cells;
  for (int i = 0; i < 40; ++i) cells.push_back(i * 3);
  const BairePrefix g(cells);
  for (std::size_t n = 0; n < 8; ++n) {
    for (std::size_t k = 0; k < 8; ++k) {
      const std::size_t i = pair_index(n, k);
      if (i < g.size()) ASSERT_EQ(matrix_entry(g, n, k), g[i]);
    }
  }
}

TEST(Matrix, PackIsMinimalAndExact) {
  const std::vector<BairePrefix> rows{{1, 2, 3}, {4}, {}, {5, 6}};
  const BairePrefix f = matrix_pack(rows);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) EXPECT_EQ(matrix_entry(f, r, c), rows[r][c]);
  }
  EXPECT_EQ(f.size(), pair_index(3, 1) + 1);
  EXPECT_TRUE(matrix_pack({}).empty());
}

TEST(BitWord, IndexRoundTrip) {
  for (std::uint64_t i = 0; i < 16; ++i) EXPECT_EQ(BitWord::from_index(4, i).index(), i);
  EXPECT_EQ(BitWord::from_index(3, 4).str(), "100");
  EXPECT_THROW(BitWord::parse("01x"), std::invalid_argument);
}

}  // namespace
}  // namespace idealis
