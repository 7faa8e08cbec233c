// Serial reference sweep against the OpenMP sweep on the default grid.
// Trials per law are the benchmark argument.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "witt/verifier.hpp"

namespace {

wittlab::TrialPlan plan_with(std::uint64_t trials) {
  wittlab::TrialPlan plan = wittlab::TrialPlan::default_plan();
  plan.trials = trials;
  plan.law_trials.clear();
  return plan;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto plan = plan_with(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wittlab::check_axioms_serial(plan));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(plan.grid.size() * wittlab::law_names().size()) *
                          state.range(0));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto plan = plan_with(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wittlab::check_axioms(plan));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(plan.grid.size() * wittlab::law_names().size()) *
                          state.range(0));
  state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepParallel)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
