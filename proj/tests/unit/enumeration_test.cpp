#include "idealis/enumeration.hpp"

#include <gtest/gtest.h>

namespace idealis::enumeration {
namespace {

Clopen clopen(unsigned level, std::initializer_list<const char*> words) {
  std::vector<BitWord> ws;
  for (const char* w : words) ws.push_back(BitWord::parse(w));
  return canonicalize(level, ws);
}

TEST(ClopenEnum, Examples) {
  for (unsigned n = 0; n < 5; ++n) EXPECT_TRUE(clopen_enum(n, 0).is_empty());
  EXPECT_EQ(clopen_enum(0, 1), clopen(1, {"0"}));
  EXPECT_EQ(clopen_enum(1, 1), clopen(2, {"00"}));
  EXPECT_EQ(clopen_rank(3, Clopen::empty()), 0);
  EXPECT_EQ(clopen_rank(0, clopen(1, {"0"})), 1);
}

TEST(ClopenEnum, RankInvertsEnum) {
  for (unsigned n = 0; n <= 3; ++n) {
    for (int k = 0; k <= 500; ++k) {
      const Clopen c = clopen_enum(n, k);
      ASSERT_LT(measure(c), Dyadic::pow2_neg(n));
      ASSERT_EQ(clopen_rank(n, c), k) << "n=" << n << " k=" << k;
    }
  }
}

TEST(ClopenEnum, OrderIsLevelThenMask) {
  for (unsigned n = 0; n <= 2; ++n) {
    Clopen prev = clopen_enum(n, 1);
    for (int k = 2; k <= 300; ++k) {
      const Clopen c = clopen_enum(n, k);
      ASSERT_LE(prev.level(), c.level());
      prev = c;
    }
  }
}

TEST(ClopenEnum, RejectsLargeMeasure) {
  EXPECT_THROW(clopen_rank(1, clopen(1, {"0"})), Error);
  EXPECT_THROW(clopen_rank(0, Clopen::whole()), Error);
}

TEST(ClopenEnum, DeepRanksAreExact) {
  Mask m(std::size_t{1} << 10);
  m.set(3);
  m.set(700);
  const Clopen c = Clopen::from_mask(10, m);
  const Nat r = clopen_rank(2, c);
  EXPECT_EQ(clopen_enum(2, r), c);
}

TEST(BasicOpen, CantorOrder) {
  EXPECT_TRUE(basic_open_cantor(0).is_empty());
  EXPECT_TRUE(basic_open_cantor(1).is_whole());
  EXPECT_EQ(basic_open_cantor(2), clopen(1, {"0"}));
  EXPECT_EQ(basic_open_cantor(3), clopen(1, {"1"}));
  EXPECT_EQ(basic_open_cantor(4), clopen(2, {"00"}));
  for (int i = 1; i < 200; ++i) EXPECT_EQ(cantor_basic_index(*cantor_basic_word(i)), i);
}

TEST(BasicOpen, BaireOrder) {
  EXPECT_FALSE(basic_open_baire(0).has_value());
  EXPECT_TRUE(basic_open_baire(1)->empty());
  for (int i = 1; i < 200; ++i) EXPECT_EQ(baire_basic_index(*basic_open_baire(i)), i);
}

TEST(Kprime, Examples) {
  for (int m = 0; m < 5; ++m) {
    EXPECT_EQ(kprime(0, m, BaseSpace::Cantor), 0);
    EXPECT_EQ(kprime(0, m, BaseSpace::Baire), 0);
  }
  EXPECT_EQ(kprime(2, 0, BaseSpace::Cantor), 2);
  EXPECT_EQ(kprime(2, 1, BaseSpace::Cantor), 4);
}

TEST(Kprime, CantorEnumeratesSubsetsInOrder) {
  for (int n = 1; n < 16; ++n) {
    const BitWord stem = *cantor_basic_word(n);
    std::vector<Nat> expected;
    for (int i = 1; i < 1024 && expected.size() < 20; ++i) {
      if (stem.is_prefix_of(*cantor_basic_word(i))) expected.push_back(i);
    }
    for (std::size_t m = 0; m < expected.size(); ++m) {
      ASSERT_EQ(kprime(n, m, BaseSpace::Cantor), expected[m]) << n << "," << m;
    }
  }
}

TEST(Kprime, BaireEnumeratesSubsetsInOrder) {
  for (int n = 1; n < 12; ++n) {
    const auto stem = basic_open_baire(n)->entries();
    std::vector<Nat> expected;
    for (int i = 1; i < 4000 && expected.size() < 12; ++i) {
      const auto s = basic_open_baire(i)->entries();
      if (s.size() >= stem.size() && std::equal(stem.begin(), stem.end(), s.begin())) expected.push_back(i);
    }
    for (std::size_t m = 0; m < expected.size(); ++m) {
      ASSERT_EQ(kprime(n, m, BaseSpace::Baire), expected[m]) << n << "," << m;
    }
  }
}

TEST(LexWord, Examples) {
  EXPECT_EQ(lex_word(2, 0).str(), "00");
  EXPECT_EQ(lex_word(2, 3).str(), "11");
  EXPECT_EQ(lex_word(3, 4).str(), "100");
  EXPECT_THROW(lex_word(2, 4), Error);
}

TEST(Kcomb, Examples) {
  EXPECT_EQ(kcomb_unrank(4, 2, 0), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(kcomb_unrank(4, 2, 5), (std::vector<std::size_t>{2, 3}));
  EXPECT_THROW(kcomb_unrank(4, 2, 6), Error);
  EXPECT_TRUE(kcomb_unrank(5, 0, 0).empty());
}

TEST(Kcomb, RankInvertsUnrankSmall) {
  for (std::size_t N = 0; N <= 10; ++N) {
    for (std::size_t t = 0; t <= N; ++t) {
      const Nat total = binomial(N, t);
      std::vector<std::size_t> prev;
      for (Nat r = 0; r < total; ++r) {
        const auto s = kcomb_unrank(N, t, r);
        ASSERT_EQ(s.size(), t);
        ASSERT_EQ(kcomb_rank(N, s), r);
        if (r > 0) ASSERT_LT(prev, s);
        prev = s;
      }
    }
  }
}

}  // namespace
}  // namespace idealis::enumeration
