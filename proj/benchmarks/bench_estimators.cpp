#include <benchmark/benchmark.h>

#include "dimscope/estimators.hpp"
#include "dimscope/manifolds.hpp"
#include "dimscope/neighbors.hpp"

namespace {

dimscope::RepresentationSet cube(std::size_t n, std::size_t d) {
  dimscope::ManifoldSpec spec;
  spec.kind = dimscope::ManifoldKind::Hypercube;
  spec.intrinsic_dim = 5;
  spec.ambient_dim = d;
  spec.n_points = n;
  spec.seed = 1;
  return dimscope::sample_manifold(spec);
}

void BM_NearestNeighbors(benchmark::State& state) {
  const auto set = cube(static_cast<std::size_t>(state.range(0)), 100);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dimscope::nearest_neighbors(set, 20));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NearestNeighbors)->Arg(1000)->Arg(2000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_TwoNN(benchmark::State& state) {
  const auto set = cube(static_cast<std::size_t>(state.range(0)), 100);
  for (auto _ : state) benchmark::DoNotOptimize(dimscope::twonn_estimate(set));
}
BENCHMARK(BM_TwoNN)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_Mle(benchmark::State& state) {
  const auto set = cube(static_cast<std::size_t>(state.range(0)), 100);
  for (auto _ : state) benchmark::DoNotOptimize(dimscope::mle_estimate(set, 20));
}
BENCHMARK(BM_Mle)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_Pca(benchmark::State& state) {
  const auto set = cube(10000, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dimscope::pca_effective_dim(set));
}
BENCHMARK(BM_Pca)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace
