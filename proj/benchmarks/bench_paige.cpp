#include <benchmark/benchmark.h>

#include <random>

#include "paige/closure.hpp"
#include "paige/generators.hpp"
#include "paige/loop_table.hpp"
#include "paige/octonion.hpp"
#include "paige/unit_loop.hpp"

using namespace paige;

namespace {

const ElementSet<CanonicalElement>& loop_at(unsigned p) {
  static const auto p3 = enumerate_unit_loop(3);
  static const auto p5 = enumerate_unit_loop(5);
  return p == 3 ? p3 : p5;
}

void BM_ZornMul(benchmark::State& state) {
  const auto& loop = loop_at(5);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(zorn_mul_unchecked(loop[i % loop.size()].matrix(), loop[(i * 7 + 3) % loop.size()].matrix()));
    ++i;
  }
}
BENCHMARK(BM_ZornMul);

void BM_CanonicalMul(benchmark::State& state) {
  const auto& loop = loop_at(5);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize((loop[i % loop.size()] * loop[(i * 7 + 3) % loop.size()]).key());
    ++i;
  }
}
BENCHMARK(BM_CanonicalMul);

void BM_BatchedProductKeys(benchmark::State& state) {
  const auto& loop = loop_at(5);
  std::vector<std::uint64_t> keys(loop.size());
  std::size_t i = 0;
  for (auto _ : state) {
    left_product_keys(loop[i++ % loop.size()], loop.elements().data(), loop.size(), keys.data());
    benchmark::DoNotOptimize(keys.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(loop.size()));
}
BENCHMARK(BM_BatchedProductKeys);

void BM_FlatIndexLookup(benchmark::State& state) {
  const auto& loop = loop_at(5);
  std::mt19937_64 rng(1);
  std::vector<std::uint64_t> probes(4096);
  for (auto& k : probes) k = loop[rng() % loop.size()].key() ^ (rng() & 1);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(loop.contains_key(probes[i++ & 4095]));
}
BENCHMARK(BM_FlatIndexLookup);

void BM_ClosureTheorem(benchmark::State& state) {
  const unsigned p = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(closure(materialize(GeneratorSet::Theorem, p)).size());
}
BENCHMARK(BM_ClosureTheorem)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_MoufangM120(benchmark::State& state) {
  const auto t = build_table(enumerate_unit_loop(2));
  for (auto _ : state) benchmark::DoNotOptimize(check_moufang(t.table));
}
BENCHMARK(BM_MoufangM120)->Unit(benchmark::kMillisecond);

void BM_OctMul(benchmark::State& state) {
  const auto jp = jprime_enumerate();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(oct_mul(jp[i % jp.size()], jp[(i * 11 + 5) % jp.size()]));
    ++i;
  }
}
BENCHMARK(BM_OctMul);

void BM_JPrimeEnumerate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(jprime_enumerate().size());
}
BENCHMARK(BM_JPrimeEnumerate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
