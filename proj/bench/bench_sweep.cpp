// Serial reference vs OpenMP kernel on the phase/retention grid.

#include "faraday/sweep.hpp"

#include <benchmark/benchmark.h>

namespace {

using faraday::CaseKind;
using faraday::Execution;

void fig2_grid(benchmark::State& state, Execution exec) {
  const auto detunings = faraday::linspace(10.0, 70.0, 8);
  const auto lambda2 =
      faraday::linspace(0.05, 10.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto r = faraday::fig2_sweep(CaseKind::CaseII, detunings, lambda2, exec);
    benchmark::DoNotOptimize(r.rows.data());
  }
  state.SetItemsProcessed(state.iterations() * detunings.size() *
                          lambda2.size());
  state.counters["threads"] = exec == Execution::Parallel
                                  ? faraday::worker_count()
                                  : 1;
}

void fig5_grid(benchmark::State& state, Execution exec) {
  const auto alpha =
      faraday::linspace(0.0, 1.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto r = faraday::fig5_sweep(alpha, true, CaseKind::CaseII, exec);
    benchmark::DoNotOptimize(r.rows.data());
  }
  state.SetItemsProcessed(state.iterations() * 3 * alpha.size());
}

}  // namespace

BENCHMARK_CAPTURE(fig2_grid, serial, Execution::Serial)->Arg(64)->Arg(512);
BENCHMARK_CAPTURE(fig2_grid, parallel, Execution::Parallel)->Arg(64)->Arg(512);
BENCHMARK_CAPTURE(fig5_grid, serial, Execution::Serial)->Arg(1001);
BENCHMARK_CAPTURE(fig5_grid, parallel, Execution::Parallel)->Arg(1001);

BENCHMARK_MAIN();
