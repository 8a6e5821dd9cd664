// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "smcov/curve.hpp"
#include "smcov/montecarlo.hpp"

namespace {

smcov::SimulationRequest request(bool mmse) {
  smcov::SimulationRequest r;
  r.config = {1.0, 4.0, 0.0, 1, 4};
  r.receiver = mmse ? smcov::Receiver{smcov::MmseReceiver{}} : smcov::Receiver{smcov::PzfReceiver{2}};
  r.trials = 2000;
  r.seed = 7;
  return r;
}

void BM_SimulateSerial(benchmark::State& state) {
  const auto r = request(state.range(0) != 0);
  for (auto _ : state) benchmark::DoNotOptimize(smcov::simulate_sinr_serial(r));
  state.SetItemsProcessed(state.iterations() * r.trials);
}

void BM_SimulateParallel(benchmark::State& state) {
  const auto r = request(state.range(0) != 0);
  for (auto _ : state) benchmark::DoNotOptimize(smcov::simulate_sinr(r, static_cast<int>(state.range(1))));
  state.SetItemsProcessed(state.iterations() * r.trials);
}

const smcov::NetworkConfig kCurveConfig{1.0, 4.0, 0.05, 2, 6};

void BM_CurveSerial(benchmark::State& state) {
  const auto grid = smcov::db_grid(-5, 20, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(smcov::coverage_curve_serial(kCurveConfig, smcov::MmseReceiver{}, grid));
}

void BM_CurveParallel(benchmark::State& state) {
  const auto grid = smcov::db_grid(-5, 20, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        smcov::coverage_curve(kCurveConfig, smcov::MmseReceiver{}, grid, static_cast<int>(state.range(0))));
}

}  // namespace

// Argument 0: 0 = PZF, 1 = MMSE. Argument 1: threads.
BENCHMARK(BM_SimulateSerial)->Arg(0)->Arg(1)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimulateParallel)->ArgsProduct({{0, 1}, {1, 2, 4}})->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CurveSerial)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CurveParallel)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
