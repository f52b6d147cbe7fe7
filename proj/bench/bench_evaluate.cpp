// Serial reference loops against the OpenMP kernels on one synthetic dataset.

#include <benchmark/benchmark.h>

#include "tgl/explainer.hpp"
#include "tgl/inference.hpp"
#include "tgl/synth.hpp"

namespace {

const tgl::Dataset& dataset() {
  static const tgl::Dataset d = [] {
    tgl::SynthConfig cfg;
    cfg.nodes = 5000;
    cfg.labels = 8;
    return tgl::generate_synthetic(cfg);
  }();
  return d;
}

tgl::Params params(int64_t measure) {
  tgl::Params p;
  p.similarity = tgl::kAllMeasures[static_cast<std::size_t>(measure)];
  return p;
}

void BM_EvaluateSerial(benchmark::State& state) {
  const auto p = params(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tgl::serial::evaluate_accuracy(dataset(), p));
  state.SetLabel(std::string(tgl::measure_name(p.similarity)));
}

void BM_EvaluateParallel(benchmark::State& state) {
  const auto p = params(state.range(0));
  tgl::EvalOptions options;
  options.workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(tgl::evaluate_accuracy(dataset(), p, options));
  state.SetLabel(std::string(tgl::measure_name(p.similarity)));
}

void BM_CoverageSerial(benchmark::State& state) {
  const tgl::Params p;
  tgl::CoverageOptions options;
  options.sample = 200;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        tgl::serial::content_coverage(dataset(), p.similarity, 0.5, p, options));
  }
}

void BM_CoverageParallel(benchmark::State& state) {
  const tgl::Params p;
  tgl::CoverageOptions options;
  options.sample = 200;
  options.workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tgl::content_coverage(dataset(), p.similarity, 0.5, p, options));
  }
}

}  // namespace

BENCHMARK(BM_EvaluateSerial)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluateParallel)
    ->ArgsProduct({benchmark::CreateDenseRange(0, 5, 1), {1, 2, 4}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoverageSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoverageParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
