#include <benchmark/benchmark.h>

#include "dimscope/complexity.hpp"
#include "dimscope/dataset.hpp"
#include "dimscope/grammar.hpp"

namespace {

const dimscope::GrammarSpec& len17() {
  static const dimscope::GrammarSpec g = dimscope::load_grammar_file(
      std::filesystem::path(DIMSCOPE_BENCH_GRAMMAR_DIR) / "len17.json");
  return g;
}

dimscope::DatasetConfig config(std::size_t k, std::size_t n) {
  dimscope::DatasetConfig c;
  c.grammar = "len17";
  c.k = k;
  c.n_sequences = n;
  return c;
}

void BM_SampleDataset(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dimscope::sample_dataset(len17(), config(k, 10000)));
  }
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_SampleDataset)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_Shuffle(benchmark::State& state) {
  const auto d = dimscope::sample_dataset(len17(), config(2, 10000));
  for (auto _ : state) benchmark::DoNotOptimize(dimscope::shuffle_dataset(d, 3));
}
BENCHMARK(BM_Shuffle)->Unit(benchmark::kMillisecond);

void BM_EstimateKc(benchmark::State& state) {
  const auto d = dimscope::sample_dataset(len17(), config(1, 10000));
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dimscope::estimate_kc(d, level));
}
BENCHMARK(BM_EstimateKc)->Arg(1)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace
