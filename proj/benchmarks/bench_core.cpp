// Copyright 2026 The diskbath Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cmath>
#include <numbers>

#include <benchmark/benchmark.h>

#include "diskbath/dynamics.hpp"
#include "diskbath/engine.hpp"
#include "diskbath/geometry.hpp"
#include "diskbath/observables.hpp"
#include "diskbath/oracles.hpp"
#include "diskbath/random.hpp"

namespace {

using namespace diskbath;

const GeometryConfig kUnit(1.0, 1.0);

void BM_SampleEmission(benchmark::State& st) {
  RandomStream rng(1);
  for (auto _ : st) benchmark::DoNotOptimize(sample_emission(1.0, rng));
}
BENCHMARK(BM_SampleEmission);

void BM_TraceRay(benchmark::State& st) {
  RandomStream rng(2);
  const double outer = kUnit.outer_radius();
  for (auto _ : st) {
    const double a = rng.uniform(-0.5, 0.5) * std::numbers::pi;
    const double r = rng.uniform(kUnit.R(), outer);
    const double b = rng.uniform(0.0, 2.0 * std::numbers::pi);
    benchmark::DoNotOptimize(
        trace_ray(kUnit, {r * std::cos(a), r * std::sin(a)}, {std::cos(b), std::sin(b)}, Half::Right));
  }
}
BENCHMARK(BM_TraceRay);

void BM_SimulatorStep(benchmark::State& st) {
  const int k = static_cast<int>(st.range(0));
  RandomStream rng(3);
  SystemState state = sample_emitted_state(kUnit, ReservoirParams(1.0, 2.0), k, k, rng);
  Simulator sim(state, rng);
  for (auto _ : st) benchmark::DoNotOptimize(sim.step());
  st.SetItemsProcessed(st.iterations());
}
BENCHMARK(BM_SimulatorStep)->Arg(1)->Arg(4)->Arg(16);

void BM_RunToTau(benchmark::State& st) {
  RandomStream rng(4);
  SystemState state = sample_emitted_state(kUnit, ReservoirParams(1.0, 2.0), 1, 1, rng);
  for (auto _ : st) benchmark::DoNotOptimize(run_to_tau(state, rng));
}
BENCHMARK(BM_RunToTau);

void BM_MaxFreeFlight(benchmark::State& st) {
  RandomStream rng(5);
  const SystemState state = sample_emitted_state(kUnit, ReservoirParams(1.0, 2.0), 4, 4, rng);
  for (auto _ : st) benchmark::DoNotOptimize(max_free_flight(state));
}
BENCHMARK(BM_MaxFreeFlight);

void BM_KBound(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(oracles::K_bound(1.0, kUnit));
}
BENCHMARK(BM_KBound);

}  // namespace

BENCHMARK_MAIN();
