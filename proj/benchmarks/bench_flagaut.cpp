#include <benchmark/benchmark.h>

#include "flagaut/flagaut.hpp"

namespace {

using namespace flagaut;

void BM_BuildChevalley(benchmark::State& state) {
  const DynkinType t = DynkinType::make(Family::B, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_lie_algebra(t, 2).dim());
}
BENCHMARK(BM_BuildChevalley)->DenseRange(2, 5);

void BM_PhiRoundTrip(benchmark::State& state) {
  const ParabolicSpec s{DynkinType::make(Family::C, 4), 3,
                        {Factor{0, {}, std::nullopt}, Factor{2, KernelSpec::frobenius(2), std::nullopt}}};
  for (auto _ : state) benchmark::DoNotOptimize(normalize(s));
}
BENCHMARK(BM_PhiRoundTrip);

void BM_AutGroup(benchmark::State& state) {
  const ParabolicSpec s{DynkinType::make(Family::C, 3), 3,
                        {Factor{0, {}, std::nullopt}, Factor{1, KernelSpec::frobenius(1), std::nullopt}}};
  for (auto _ : state) benchmark::DoNotOptimize(aut_group(s).lie_dim);
}
BENCHMARK(BM_AutGroup);

void BM_ExoticEnumeration(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_exotic_subalgebras().hits.size());
}
BENCHMARK(BM_ExoticEnumeration);

void BM_WedgeNormalizer(benchmark::State& state) {
  const WedgeModel W = orthogonal_wedge_model(static_cast<int>(state.range(0)));
  const Subspace N = wedge_lie_N(W);
  for (auto _ : state) benchmark::DoNotOptimize(normalizer(W.algebra, N).dim());
}
BENCHMARK(BM_WedgeNormalizer)->Arg(2)->Arg(3)->Arg(4);

void BM_MuIncidence(benchmark::State& state) {
  const WitnessScenario w{ScenarioCase::BnFrobenius, 4, static_cast<int>(state.range(0)), 2};
  for (auto _ : state) benchmark::DoNotOptimize(mu_incidence_check(w));
}
BENCHMARK(BM_MuIncidence)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
