/*
 * Copyright 2026 The prfmap Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include "prf/chain.h"
#include "prf/commands.h"
#include "prf/likelihood.h"
#include "prf/sim.h"

namespace prf {
namespace {

struct Corridor {
  Coloring world;
  ObservationSet data;

  Corridor() : world(MakeWorld({})) {
    TrajectorySpec traj;
    traj.waypoints = DefaultRoute({});
    traj.sonar = true;
    data = SimulateLog(world, traj, {}, 1).data;
  }
};

const Corridor& Scene() {
  static const Corridor scene;
  return scene;
}

void BM_RecomputeSerial(benchmark::State& state) {
  const Corridor& s = Scene();
  LikelihoodState ls(s.data, {}, s.world.window());
  for (auto _ : state) benchmark::DoNotOptimize(ls.RecomputeSerial(s.world));
  state.SetItemsProcessed(state.iterations() * s.data.size());
}

void BM_RecomputeParallel(benchmark::State& state) {
  const Corridor& s = Scene();
  LikelihoodState ls(s.data, {}, s.world.window());
  for (auto _ : state) benchmark::DoNotOptimize(ls.RecomputeParallel(s.world));
  state.SetItemsProcessed(state.iterations() * s.data.size());
}

void BM_RenderSerial(benchmark::State& state) {
  const Corridor& s = Scene();
  const GridSpec grid(s.world.window(), 0.05);
  for (auto _ : state) benchmark::DoNotOptimize(RenderSerial(s.world, grid));
  state.SetItemsProcessed(state.iterations() * grid.num_cells());
}

void BM_RenderParallel(benchmark::State& state) {
  const Corridor& s = Scene();
  const GridSpec grid(s.world.window(), 0.05);
  for (auto _ : state) benchmark::DoNotOptimize(RenderParallel(s.world, grid));
  state.SetItemsProcessed(state.iterations() * grid.num_cells());
}

SamplerConfig ShortChain() {
  SamplerConfig cfg;
  cfg.arak.p = 0.1;
  cfg.arak.window = Scene().world.window();
  cfg.burn_in = 0;
  cfg.steps = 2000;
  cfg.thin = 100;
  return cfg;
}

void BM_RunChainsSerial(benchmark::State& state) {
  ChainOptions opts;
  opts.data = &Scene().data;
  const SamplerConfig cfg = ShortChain();
  for (auto _ : state) benchmark::DoNotOptimize(RunChainsSerial(cfg, opts, 4).accumulator.samples());
  state.SetItemsProcessed(state.iterations() * 4 * cfg.steps);
}

void BM_RunChainsParallel(benchmark::State& state) {
  ChainOptions opts;
  opts.data = &Scene().data;
  const SamplerConfig cfg = ShortChain();
  for (auto _ : state) benchmark::DoNotOptimize(RunChainsParallel(cfg, opts, 4).accumulator.samples());
  state.SetItemsProcessed(state.iterations() * 4 * cfg.steps);
}

BENCHMARK(BM_RecomputeSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RecomputeParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RenderSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RenderParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunChainsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunChainsParallel)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace prf

BENCHMARK_MAIN();
