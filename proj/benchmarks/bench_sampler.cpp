#include <benchmark/benchmark.h>

#include "spinfer/datagen.hpp"
#include "spinfer/digraph.hpp"
#include "spinfer/sampler.hpp"

using namespace spinfer;

namespace {

PlantedInstance make_instance(std::size_t n, std::size_t m) {
  return synth_planted(n, m, 2 * n, 2, SPParams{0.9}, 1);
}

void BM_AllPairsDistances(benchmark::State& state) {
  const auto inst = make_instance(static_cast<std::size_t>(state.range(0)), 8);
  DistanceMatrix scratch;
  for (auto _ : state) {
    all_pairs_distances_into(inst.true_graph, scratch);
    benchmark::DoNotOptimize(scratch);
  }
}
BENCHMARK(BM_AllPairsDistances)->Arg(15)->Arg(28)->Arg(60);

void BM_CacheRebuild(benchmark::State& state) {
  const auto inst = make_instance(static_cast<std::size_t>(state.range(0)),
                                  static_cast<std::size_t>(state.range(0)));
  const DistanceMatrix dist = all_pairs_distances(inst.true_graph);
  const AlphaPowerTable table(SPParams{0.9}, inst.observed.rows());
  LikelihoodCache cache;
  for (auto _ : state) {
    cache.build(inst.observed, inst.observed, dist, table);
    benchmark::DoNotOptimize(cache);
  }
}
BENCHMARK(BM_CacheRebuild)->Arg(15)->Arg(28)->Arg(60);

void BM_MhStepMixed(benchmark::State& state) {
  const auto inst = make_instance(28, 26);
  ObservationSequence seq;
  seq.matrices.push_back(inst.observed);
  SamplerState chain_state(seq, SPParams{0.9}, Priors{2.0, 9.0});
  Rng rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(mh_step(chain_state, rng));
}
BENCHMARK(BM_MhStepMixed);

void BM_InitiatorFlip(benchmark::State& state) {
  const auto inst = make_instance(28, 26);
  ObservationSequence seq;
  seq.matrices.push_back(inst.observed);
  SamplerState chain_state(seq, SPParams{0.9}, Priors{2.0, 9.0});
  // toggle one cell back and forth through the O(n) incremental path
  for (auto _ : state) chain_state.force_initiator_flip(0, 3, 5);
}
BENCHMARK(BM_InitiatorFlip);

void BM_GraphFlip(benchmark::State& state) {
  const auto inst = make_instance(28, 26);
  ObservationSequence seq;
  seq.matrices.push_back(inst.observed);
  SamplerState chain_state(seq, SPParams{0.9}, Priors{2.0, 9.0});
  // full distance + cache rebuild per flip
  for (auto _ : state) chain_state.force_graph_flip(3, 5);
}
BENCHMARK(BM_GraphFlip);

}  // namespace

BENCHMARK_MAIN();
