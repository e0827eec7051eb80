// Copyright 2026 The entclone Authors.
// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include <benchmark/benchmark.h>

#include "entclone/cloning_analysis.hpp"
#include "entclone/monotones.hpp"
#include "entclone/state_factory.hpp"

namespace entclone {
namespace {

void BM_NegativityCloningOutput(benchmark::State& state) {
  const CloningIO io = build_cloning_pair(CloningCase::I, 0.5, 1.0 / std::sqrt(2.0));
  for (auto _ : state) benchmark::DoNotOptimize(negativity(io.rho_out));
}
BENCHMARK(BM_NegativityCloningOutput);

void BM_ReeTwoQubitPure(benchmark::State& state) {
  const BipartiteDensity rho = density(schmidt_state(SchmidtKind::Psi1, std::sqrt(0.3)));
  ReeOptions opt;
  opt.restarts = 1;
  opt.iters = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ree_upper_bound(rho, opt).upper_bound);
}
BENCHMARK(BM_ReeTwoQubitPure)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Crosscheck(benchmark::State& state) {
  CrosscheckOptions opt;
  opt.samples = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(crosscheck(CloningCase::II, opt).max_abs_deviation);
}
BENCHMARK(BM_Crosscheck)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(CloningCase::I, 0.01, 0.99, steps).size());
}
BENCHMARK(BM_Sweep)->Arg(200)->Arg(2000);

void BM_MaximalBlankRange(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(maximal_blank_range(CloningCase::I).a_low);
}
BENCHMARK(BM_MaximalBlankRange)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace entclone

BENCHMARK_MAIN();
