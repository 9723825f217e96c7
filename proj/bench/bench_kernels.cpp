// Serial reference vs OpenMP path for the two parallel kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "oracles.hpp"
#include "qpkit/garside.hpp"
#include "qpkit/lattice.hpp"

using namespace qpkit;

namespace {

std::vector<WordPair> make_pairs(int count) {
  std::mt19937 rng(1);
  std::vector<WordPair> pairs;
  for (int i = 0; i < count; ++i) {
    auto a = oracle::random_tokens(rng, 7, 60);
    auto b = a;
    for (int s = 0; s < 20; ++s) oracle::random_rewrite(rng, 7, b);
    pairs.emplace_back(BraidWord::from_tokens(7, a), BraidWord::from_tokens(7, b));
  }
  return pairs;
}

void BM_WordsEqualBatch(benchmark::State& state) {
  const auto pairs = make_pairs(512);
  const auto exec = state.range(0) ? Execution::Parallel : Execution::Serial;
  for (auto _ : state) benchmark::DoNotOptimize(words_equal_batch(pairs, exec));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(pairs.size()));
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}

// [[-2,-2],[-2,-6]] plus `blocks` copies of [[-4,-1],[-1,-4]].
IntersectionForm composite(int blocks) {
  const int r = 2 + 2 * blocks;
  IntMatrix m(r, std::vector<std::int64_t>(r, 0));
  m[0][0] = -2;
  m[0][1] = m[1][0] = -2;
  m[1][1] = -6;
  for (int b = 0; b < blocks; ++b) {
    const int i = 2 + 2 * b;
    m[i][i] = m[i + 1][i + 1] = -4;
    m[i][i + 1] = m[i + 1][i] = -1;
  }
  return IntersectionForm(m);
}

void BM_ClassesOfSquare(benchmark::State& state) {
  const auto q = composite(3);
  const auto exec = state.range(0) ? Execution::Parallel : Execution::Serial;
  for (auto _ : state) benchmark::DoNotOptimize(classes_of_square(q, -24, exec));
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}

}  // namespace

BENCHMARK(BM_WordsEqualBatch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassesOfSquare)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
