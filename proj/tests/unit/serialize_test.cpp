#include "idealis/enumeration.hpp"
#include "idealis/error.hpp"
#include "idealis/serialize.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

namespace idealis {
namespace {

using io::json;

Clopen cyl(const char* w) { return Clopen::cylinder(BitWord::parse(w)); }

TEST(Json, Naturals) {
  EXPECT_EQ(io::to_json(Nat(42)), json(42));
  const Nat big = Nat(1) << 80;
  EXPECT_TRUE(io::to_json(big).is_string());
  EXPECT_EQ(io::nat_from(io::to_json(big)), big);
  EXPECT_EQ(io::nat_from(json("17")), Nat(17));
}

TEST(Json, ClopenAndMeasure) {
  const Clopen c = io::clopen_from(json::parse(R"({"level":3,"words":["010"]})"));
  EXPECT_EQ(io::to_json(measure(c)), json::parse(R"({"num":1,"exp":3})"));
  EXPECT_EQ(io::to_json(enumeration::clopen_enum(1, 0)), json::parse(R"({"level":0,"words":[]})"));
  // Loading canonicalizes.
  EXPECT_EQ(io::to_json(io::clopen_from(json::parse(R"({"level":1,"words":["0","1"]})"))),
            json::parse(R"({"level":0,"words":[""]})"));
  EXPECT_EQ(io::clopen_from(io::to_json(cyl("0110"))), cyl("0110"));
}

TEST(Json, Partition) {
  const auto j = io::to_json(meager::partition_from(BairePrefix{2, 3}));
  EXPECT_EQ(io::partition_from_json(j), meager::partition_from(BairePrefix{2, 3}));
}

TEST(Json, MaskBits) {
  Mask m(5);
  m.set(1);
  m.set(4);
  EXPECT_EQ(io::mask_to_json(m), json("01001"));
  EXPECT_EQ(io::mask_from(json("01001")), m);
}

TEST(Params, RoundTrip) {
  const std::vector<BairePrefix> points{{3, 1, 4}, {2, 7, 1}};
  const auto c = countable::countable_encode(points, 3);
  EXPECT_EQ(io::countable_param_from(io::to_json(c)), c);

  null::CoverFamily X;
  X.covers.push_back({cyl("00")});
  X.covers.push_back({cyl("0000"), cyl("1111")});
  const auto f = null::null_encode(X);
  const json jf = io::to_json(f);
  EXPECT_EQ(jf.at("ideal"), "null");
  EXPECT_EQ(jf.at("coding"), std::string(kCodingConvention));
  EXPECT_EQ(jf.at("created-by"), std::string(io::kCreatedBy));
  EXPECT_EQ(io::null_param_from(jf), f);

  const std::vector<Clopen> opens{complement(cyl("00000"))};
  const auto e = e::e_encode(opens, 2);
  EXPECT_EQ(io::e_param_from(io::to_json(e)), e);

  const auto laver = baire::laver_encode({{std::vector<Nat>{}, Nat(5)}, {std::vector<Nat>{0, 0}, Nat(2)}});
  EXPECT_EQ(io::laver_param_from(io::to_json(laver)), laver);

  fubini::ProductInput in;
  in.covers = X;
  in.dense = opens;
  in.n_max = 2;
  const auto pp = fubini::product_encode(fubini::Variant::MeagerNull, in);
  EXPECT_EQ(io::product_param_from(io::to_json(pp)), pp);
}

TEST(Params, DenseLaverPrefix) {
  const json j = {{"ideal", "laver"}, {"coding", kCodingConvention}, {"prefix", {5, 0, 2}}};
  const auto p = io::laver_param_from(j);
  EXPECT_EQ(p.length, Nat(3));
  EXPECT_EQ(p.value(0), Nat(5));
  EXPECT_EQ(p.value(2), Nat(2));
  EXPECT_FALSE(p.exhausted);
}

TEST(Params, HeaderChecks) {
  json j = io::to_json(baire::ksigma_encode({}, 2));
  j["coding"] = "baire-other";
  try {
    (void)io::ksigma_param_from(j);
    ADD_FAILURE() << "foreign coding accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CodingMismatch);
  }
  EXPECT_THROW((void)io::laver_param_from(io::to_json(baire::ksigma_encode({}, 2))), std::invalid_argument);
}

TEST(Args, ParseArg) {
  EXPECT_EQ(io::parse_arg("[1,2]"), json::parse("[1,2]"));
  EXPECT_EQ(io::parse_arg("0110"), json("0110"));  // leading zeros are not JSON
  EXPECT_EQ(io::parse_arg("01x"), json("01x"));
}

}  // namespace
}  // namespace idealis
