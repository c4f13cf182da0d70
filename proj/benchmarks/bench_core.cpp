#include "idealis/e_ideal.hpp"
#include "idealis/enumeration.hpp"
#include "idealis/meager.hpp"
#include "idealis/null.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace idealis;
namespace en = idealis::enumeration;

void BM_ClopenUnrank(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  Nat k = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(en::clopen_enum(n, k));
    k = k % 20000 + 1;
  }
}
BENCHMARK(BM_ClopenUnrank)->Arg(0)->Arg(2)->Arg(4);

void BM_ClopenRank(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  std::vector<Clopen> sets;
  for (int k = 1; k <= 512; ++k) sets.push_back(en::clopen_enum(n, Nat(k * 37)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(en::clopen_rank(n, sets[i]));
    i = (i + 1) % sets.size();
  }
}
BENCHMARK(BM_ClopenRank)->Arg(0)->Arg(2)->Arg(4);

void BM_KcombRoundTrip(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  const std::size_t t = N / 2;
  const Nat total = en::binomial(N, t);
  Nat r = 0;
  for (auto _ : state) {
    const auto s = en::kcomb_unrank(N, t, r);
    benchmark::DoNotOptimize(en::kcomb_rank(N, s));
    r = (r + 7919) % total;
  }
}
BENCHMARK(BM_KcombRoundTrip)->Arg(16)->Arg(64)->Arg(256);

null::CoverFamily family(std::size_t levels) {
  null::CoverFamily X;
  for (std::size_t n = 0; n < levels; ++n) {
    std::string w(n + 3, '0');
    X.covers.push_back({Clopen::cylinder(BitWord::parse(w)), Clopen::cylinder(BitWord::parse(std::string(n + 3, '1')))});
  }
  return X;
}

void BM_NullEncode(benchmark::State& state) {
  const auto X = family(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(null::null_encode(X));
}
BENCHMARK(BM_NullEncode)->Arg(2)->Arg(4)->Arg(6);

void BM_NullMember(benchmark::State& state) {
  const auto f = null::null_encode(family(6));
  const BitWord z = BitWord::parse("0000000000");
  for (auto _ : state) benchmark::DoNotOptimize(null::null_member(f, z, 5));
}
BENCHMARK(BM_NullMember);

void BM_FxpEval(benchmark::State& state) {
  const auto P = meager::partition_from(BairePrefix{2, 3, 1, 4});
  const BitWord x = BitWord::parse("0110100110011");
  const BitWord z = BitWord::parse("1001011001100");
  for (auto _ : state) benchmark::DoNotOptimize(meager::fxp_eval(x, P, z, 0));
}
BENCHMARK(BM_FxpEval);

void BM_EOpenEncode(benchmark::State& state) {
  const Clopen V = complement(Clopen::cylinder(BitWord::parse("00000000")));
  const auto m_max = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(e::e_open_encode(V, m_max));
}
BENCHMARK(BM_EOpenEncode)->Arg(2)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
