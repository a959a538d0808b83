#include <benchmark/benchmark.h>

#include "alignlab/alignment.hpp"
#include "alignlab/equivalence.hpp"
#include "alignlab/genfunc.hpp"
#include "alignlab/model.hpp"

namespace {

using namespace alignlab;

ModelParams bench_params(int n, int m) {
  return ModelParams{n, m, validate(0.3, 0.1, 0.1, 0.5), validate(0.35, 0.05, 0.05, 0.55)};
}

void BM_SamplePair(benchmark::State& state) {
  const ModelParams params = bench_params(static_cast<int>(state.range(0)), 8);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_pair(params, seed++));
}
BENCHMARK(BM_SamplePair)->Arg(16)->Arg(64)->Arg(256);

void BM_MapAlign(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ModelParams params = bench_params(n, 4);
  const GraphPair pair = sample_pair(params, 1);
  const Permutation truth = Permutation::random(n, 2);
  const AttributedGraph g2p = anonymize(pair.g2, truth);
  for (auto _ : state) benchmark::DoNotOptimize(map_align(pair.g1, g2p, params, 9, truth));
}
BENCHMARK(BM_MapAlign)->Arg(5)->Arg(6)->Arg(7);

void BM_FullPgf(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ModelParams params = bench_params(n, 2);
  std::vector<int> mapping(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) mapping[static_cast<std::size_t>(i)] = (i + 1) % n;  // full cycle
  const Permutation perm(mapping);
  for (auto _ : state) benchmark::DoNotOptimize(full_pgf(perm, params));
}
BENCHMARK(BM_FullPgf)->Arg(4)->Arg(6)->Arg(8);

void BM_CountIndistinguishable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ModelParams params = bench_params(n, 8);
  const AttributedGraph g = intersection(sample_pair(params, 3));
  for (auto _ : state) benchmark::DoNotOptimize(count_indistinguishable(g));
}
BENCHMARK(BM_CountIndistinguishable)->Arg(8)->Arg(32)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
