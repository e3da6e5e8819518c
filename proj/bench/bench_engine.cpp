// Serial reference vs OpenMP kernels for the round loop and the tally.

#include <benchmark/benchmark.h>

#include "vareff/adversary.hpp"
#include "vareff/engine.hpp"

namespace {

using namespace vareff;

ValidatedParams params_for(std::int64_t rounds) {
  ProtocolParams p;
  p.rounds = static_cast<std::uint64_t>(rounds);
  return validate_params(p);
}

AdversaryStrategy mixed() {
  AdversaryStrategy s;
  s.q = 1.0;
  s.p_c = 0.5;
  s.blinding.p_e = 0.9;
  s.quantum.lambda = 0.02;
  return s;
}

void BM_SimulateSerial(benchmark::State& state) {
  const ValidatedParams params = params_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_simulation_serial(params, mixed(), 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SimulateParallel(benchmark::State& state) {
  const ValidatedParams params = params_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_simulation(params, mixed(), 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_TallySerial(benchmark::State& state) {
  const auto records = run_simulation(params_for(state.range(0)), mixed(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(tally_serial(records));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_TallyParallel(benchmark::State& state) {
  const auto records = run_simulation(params_for(state.range(0)), mixed(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(tally(records));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_SimulateSerial)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimulateParallel)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TallySerial)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TallyParallel)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
