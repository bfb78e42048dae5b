#include <benchmark/benchmark.h>

#include "planelayers/centralized.hpp"
#include "planelayers/distributed.hpp"
#include "planelayers/generators.hpp"
#include "planelayers/general_position.hpp"
#include "planelayers/verify.hpp"

using namespace planelayers;

namespace {

void BM_Emst(benchmark::State& state) {
  const PointSet ps = gen_uniform(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(build_emst(ps));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Emst)->RangeMultiplier(2)->Range(256, 8192)->Complexity();

void BM_TwoTrees(benchmark::State& state) {
  PointSet ps = gen_uniform(static_cast<std::size_t>(state.range(0)), 2);
  if (find_collinear_triple(ps)) ps = perturb(ps);
  for (auto _ : state) benchmark::DoNotOptimize(build_two_disjoint_trees(ps));
}
BENCHMARK(BM_TwoTrees)->RangeMultiplier(2)->Range(256, 4096);

void BM_KLayers(benchmark::State& state) {
  const PointSet ps = gen_uniform(static_cast<std::size_t>(state.range(0)), 3);
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_k_layers(ps, k));
}
BENCHMARK(BM_KLayers)->ArgsProduct({{500, 2000, 8000}, {1, 2, 3}})->Unit(benchmark::kMillisecond);

void BM_KLayersThreads(benchmark::State& state) {
  const PointSet ps = gen_uniform(8000, 4);
  const DistributedOptions opt{std::nullopt, static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(build_k_layers(ps, 2, opt));
}
BENCHMARK(BM_KLayersThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_CenterPoint(benchmark::State& state) {
  const PointSet ps = gen_uniform(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(center_point_lattice(ps.points()));
}
BENCHMARK(BM_CenterPoint)->RangeMultiplier(4)->Range(16, 1024);

void BM_VerifyTwoTrees(benchmark::State& state) {
  PointSet ps = gen_uniform(static_cast<std::size_t>(state.range(0)), 6);
  if (find_collinear_triple(ps)) ps = perturb(ps);
  const TwoTrees t = build_two_disjoint_trees(ps);
  for (auto _ : state) benchmark::DoNotOptimize(verify_two_trees(t, ps));
}
BENCHMARK(BM_VerifyTwoTrees)->RangeMultiplier(2)->Range(256, 2048)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
