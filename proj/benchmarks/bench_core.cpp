#include <benchmark/benchmark.h>

#include "cfbayes/audit.hpp"
#include "cfbayes/classifier.hpp"
#include "cfbayes/decomposer.hpp"
#include "cfbayes/lab.hpp"
#include "cfbayes/oracle.hpp"
#include "cfbayes/sampler.hpp"

using namespace cfbayes;

static void BM_Marginal(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto d = sample_distribution(Family::Dirichlet, k, 1);
  const Event e{{0, true}, {1, false}};
  for (auto _ : state) benchmark::DoNotOptimize(marginal(d, e));
}
BENCHMARK(BM_Marginal)->DenseRange(4, 16, 4);

static void BM_Classify(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto d = sample_distribution(Family::Dirichlet, k, 1);
  const Problem p(d.space(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(classify(d, p, IndependenceVariant::Symmetric));
}
BENCHMARK(BM_Classify)->DenseRange(3, 9, 2);

static void BM_LemmaGaps(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto d = sample_distribution(Family::Dirichlet, k, 1);
  const Problem p(d.space(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(lemma_gaps(d, p));
}
BENCHMARK(BM_LemmaGaps)->DenseRange(3, 7, 2);

static void BM_Audit(benchmark::State& state) {
  AuditConfig cfg;
  cfg.families = {Family::Dirichlet};
  cfg.count = static_cast<std::size_t>(state.range(0));
  cfg.attributes = 3;
  for (auto _ : state) benchmark::DoNotOptimize(audit(cfg));
}
BENCHMARK(BM_Audit)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_GreedyDecompose(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto d = sample_distribution(Family::Dirichlet, k, 1);
  const Problem p(d.space(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_decompose(d, p, 1e-9, k));
}
BENCHMARK(BM_GreedyDecompose)->DenseRange(3, 7, 2)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
