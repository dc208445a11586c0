#include <benchmark/benchmark.h>

#include "pwll/active_loop.hpp"
#include "pwll/datasets.hpp"
#include "pwll/graph.hpp"
#include "pwll/pwll_solver.hpp"
#include "pwll/reweighting.hpp"

namespace {

using namespace pwll;

const Dataset& Blobs() {
  static const Dataset d = gen_blobs(0);
  return d;
}

const SimilarityGraph& BlobsGraph() {
  static const SimilarityGraph g = build_knn_graph(Blobs().features, {});
  return g;
}

LabelState TwoLabels() {
  LabelState s(Blobs().size(), 2);
  s.add(0, 0);
  s.add(300, 1);
  return s;
}

void BM_KnnGraph(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_knn_graph(Blobs().features, {}));
}
BENCHMARK(BM_KnnGraph)->Unit(benchmark::kMillisecond);

void BM_SolveGamma(benchmark::State& state) {
  const LabelState s = TwoLabels();
  for (auto _ : state) benchmark::DoNotOptimize(solve_gamma(BlobsGraph(), s.labeled()));
}
BENCHMARK(BM_SolveGamma)->Unit(benchmark::kMillisecond);

void BM_SolvePwll(benchmark::State& state) {
  const LabelState s = TwoLabels();
  const NodeWeights gamma = solve_gamma(BlobsGraph(), s.labeled());
  const double tau = static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(solve_pwll(BlobsGraph(), gamma, s, tau));
}
BENCHMARK(BM_SolvePwll)->Arg(0)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_SolvePwllWarm(benchmark::State& state) {
  LabelState s = TwoLabels();
  const NodeWeights g0 = solve_gamma(BlobsGraph(), s.labeled());
  const Matrix prev = solve_pwll(BlobsGraph(), g0, s, 1.0).u;
  s.add(600, 0);
  const NodeWeights gamma = solve_gamma(BlobsGraph(), s.labeled());
  SolveOptions opt;
  opt.warm_start = &prev;
  for (auto _ : state) benchmark::DoNotOptimize(solve_pwll(BlobsGraph(), gamma, s, 1.0, opt));
}
BENCHMARK(BM_SolvePwllWarm)->Unit(benchmark::kMillisecond);

void BM_ActiveLoop20(benchmark::State& state) {
  ExperimentConfig cfg;
  cfg.acquisition = acquisition_preset("norm", 1.0, {});
  cfg.n_queries = 20;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_experiment(Blobs(), BlobsGraph(), cfg, truth_oracle(Blobs())));
  }
}
BENCHMARK(BM_ActiveLoop20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
