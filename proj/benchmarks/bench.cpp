#include <benchmark/benchmark.h>

#include <random>

#include "mchar/chartable.hpp"
#include "mchar/rep.hpp"
#include "mchar/verify.hpp"

using namespace mchar;

static void BM_FieldMul(benchmark::State& state) {
  const FieldCtx f = build_field(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> d(0, f.unit_order(Level::Quartic) - 1);
  const FElem a = f.eta(d(rng));
  FElem x = f.eta(d(rng));
  for (auto _ : state) {
    x = f.add(f.mul(x, a), a);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_FieldMul)->Arg(3)->Arg(7)->Arg(13);

static void BM_GroupMul(benchmark::State& state) {
  const Group g(state.range(0));
  std::mt19937_64 rng(2);
  const GElem a = g.random(rng);
  GElem x = g.random(rng);
  for (auto _ : state) {
    x = g.mul(x, a);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_GroupMul)->Arg(3)->Arg(7)->Arg(13);

static void BM_Classify(benchmark::State& state) {
  const Group g(state.range(0));
  const Conjugacy conj(g);
  std::mt19937_64 rng(3);
  std::vector<GElem> xs;
  for (int i = 0; i < 256; ++i) xs.push_back(g.random(rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(conj.classify(xs[i++ % xs.size()]));
}
BENCHMARK(BM_Classify)->Arg(3)->Arg(7)->Arg(13);

static void BM_BuildTable(benchmark::State& state) {
  const Group g(state.range(0));
  const Conjugacy conj(g);
  for (auto _ : state) benchmark::DoNotOptimize(build_table(conj));
}
BENCHMARK(BM_BuildTable)->Arg(3)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_PhiLift(benchmark::State& state) {
  const Group g(state.range(0));
  const InducedRep rep(g, l_minus(g.q()).front());
  std::mt19937_64 rng(4);
  const GElem x = g.random(rng);
  for (auto _ : state) benchmark::DoNotOptimize(rep.phi_lift(x));
}
BENCHMARK(BM_PhiLift)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMicrosecond);

static void BM_Partition(benchmark::State& state) {
  const Group g(state.range(0));
  const Conjugacy conj(g);
  for (auto _ : state) benchmark::DoNotOptimize(partition_classes(conj));
}
BENCHMARK(BM_Partition)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
