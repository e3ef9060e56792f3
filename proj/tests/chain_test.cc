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

#include "prf/chain.h"

#include <cmath>
#include <sstream>

#include "gtest/gtest.h"
#include "prf/sim.h"
#include "testing.h"

namespace prf {
namespace {

const Rect kUnit{{0, 0}, {1, 1}};

SamplerConfig PriorConfig(std::int64_t steps, double p = 0.5) {
  SamplerConfig cfg;
  cfg.arak = {.p = p, .window = kUnit};
  cfg.burn_in = 1000;
  cfg.steps = steps;
  cfg.thin = 50;
  cfg.raster_cell_size = 0.1;
  return cfg;
}

TEST(TemperatureScheduleTest, Geometric) {
  const TemperatureSchedule t{1.0, 0.01};
  EXPECT_DOUBLE_EQ(t.At(0, 100), 1.0);
  EXPECT_NEAR(t.At(50, 101), 0.1, 1e-12);
  EXPECT_NEAR(t.At(100, 101), 0.01, 1e-12);
  EXPECT_DOUBLE_EQ((TemperatureSchedule{}.At(7, 10)), 1.0);
}

TEST(SamplerConfigTest, Checks) {
  EXPECT_NO_THROW(CheckSamplerConfig(PriorConfig(10)));
  SamplerConfig bad = PriorConfig(10);
  bad.thin = 0;
  EXPECT_THROW(CheckSamplerConfig(bad), std::invalid_argument);
  bad = PriorConfig(10);
  bad.arak.p = 0.0;
  EXPECT_THROW(CheckSamplerConfig(bad), std::invalid_argument);
  bad = PriorConfig(10);
  bad.steps = -1;
  EXPECT_THROW(CheckSamplerConfig(bad), std::invalid_argument);
}

TEST(RenderTest, SerialMatchesParallelAndParity) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 10; ++i) {
    const Coloring c = testing::RandomColoring(rng, {{0, 0}, {3, 2}}, 5, 3);
    const GridSpec grid(c.window(), 0.07);
    const Raster a = RenderSerial(c, grid), b = RenderParallel(c, grid);
    EXPECT_EQ(a.point_black, b.point_black);
    EXPECT_EQ(a.cell_white, b.cell_white);
    for (int k = 0; k < grid.num_cells(); k += 7) {
      const CellIndex cell = grid.Unflat(k);
      EXPECT_EQ(a.point_black[k], c.ColorAt(grid.CellCenter(cell)) == Color::kBlack);
      bool crossed = false;
      for (int e : c.edge_ids()) crossed |= SegmentIntersectsBox(c.EdgeSegment(e), grid.CellBox(cell));
      EXPECT_EQ(a.cell_white[k], !crossed && !a.point_black[k]);
    }
  }
}

TEST(AccumulatorTest, MergeAndProbabilities) {
  const GridSpec grid(kUnit, 0.5);
  PosteriorAccumulator a(grid), b(grid);
  EXPECT_EQ(a.PointBlackProbability(), std::vector<double>(4, 0.5));
  const std::vector<std::uint8_t> black{1, 0, 1, 0}, white{0, 1, 0, 0};
  a.AddSample(black, white);
  a.AddSample(black, black);
  b.AddSample(white, white);
  PosteriorAccumulator ab = a, ba = b;
  ab.Merge(b);
  ba.Merge(a);
  EXPECT_EQ(ab, ba);
  EXPECT_EQ(ab.samples(), 3);
  EXPECT_EQ(ab.PointBlackProbability(), (std::vector<double>{2.0 / 3, 1.0 / 3, 2.0 / 3, 0.0}));
  EXPECT_EQ(ab.CellWhiteProbability(), (std::vector<double>{1.0 / 3, 2.0 / 3, 1.0 / 3, 0.0}));
  PosteriorAccumulator other(GridSpec(kUnit, 0.25));
  EXPECT_THROW(a.Merge(other), std::invalid_argument);
}

TEST(RunChainTest, ZeroStepsLeavesEverythingEmpty) {
  SamplerConfig cfg = PriorConfig(0);
  cfg.burn_in = 0;
  PosteriorAccumulator acc(GridSpec(kUnit, 0.1));
  const PosteriorAccumulator before = acc;
  const ChainResult r = RunChain(cfg, {.accumulator = &acc});
  EXPECT_EQ(acc, before);
  EXPECT_EQ(r.final_state.num_edges(), 0);
  EXPECT_EQ(r.final_state.anchor_color(), Color::kWhite);
  EXPECT_EQ(r.report.proposals, 0);
}

TEST(RunChainTest, DeterministicUnderSeed) {
  const SamplerConfig cfg = PriorConfig(20000);
  PosteriorAccumulator a(GridSpec(kUnit, 0.1)), b(GridSpec(kUnit, 0.1));
  const ChainResult ra = RunChain(cfg, {.accumulator = &a});
  const ChainResult rb = RunChain(cfg, {.accumulator = &b});
  EXPECT_TRUE(ra.final_state.SameGraph(rb.final_state));
  EXPECT_EQ(a, b);
  for (int k = 0; k < kNumMoveKinds; ++k) {
    EXPECT_EQ(ra.report.kinds[k].accepted, rb.report.kinds[k].accepted);
  }
  PosteriorAccumulator c(GridSpec(kUnit, 0.1));
  RunChain(cfg, {.accumulator = &c, .stream = 1});
  EXPECT_NE(a, c);
}

// Renders every retained sample from scratch.
class RenderingObserver : public SampleObserver {
 public:
  explicit RenderingObserver(const GridSpec& grid) : acc(grid) {}
  void OnSample(const Coloring& c) override {
    const Raster r = RenderSerial(c, acc.grid());
    acc.AddSample(r.point_black, r.cell_white);
  }
  PosteriorAccumulator acc;
};

TEST(RunChainTest, IncrementalRasterMatchesFullRender) {
  for (double p : {0.5, 2.0}) {
    const GridSpec grid(kUnit, 0.05);
    PosteriorAccumulator acc(grid);
    RenderingObserver observer(grid);
    SamplerConfig cfg = PriorConfig(30000, p);
    cfg.raster_cell_size = 0.05;
    cfg.thin = 37;
    RunChain(cfg, {.accumulator = &acc, .observer = &observer});
    EXPECT_EQ(acc.samples(), 30000 / 37);
    EXPECT_EQ(acc, observer.acc);
  }
}

TEST(RunChainsTest, SerialAndParallelIdentical) {
  const SamplerConfig cfg = PriorConfig(5000);
  const MultiChainResult s = RunChainsSerial(cfg, {}, 3);
  const MultiChainResult p = RunChainsParallel(cfg, {}, 3);
  EXPECT_EQ(s.accumulator, p.accumulator);
  EXPECT_EQ(s.accumulator.samples(), 3 * (5000 / 50));
  for (int k = 0; k < 3; ++k) EXPECT_TRUE(s.chains[k].final_state.SameGraph(p.chains[k].final_state));
}

TEST(AnnealTest, NoDataApproachesEmptyGraph) {
  SamplerConfig cfg = PriorConfig(100000, 1.0);
  cfg.burn_in = 0;
  cfg.temperature = {1.0, 0.01};
  Coloring start(kUnit);
  std::mt19937_64 rng(3);
  start = testing::RandomColoring(rng, kUnit, 3, 2, 0.25);
  const double initial = -Potential(start.stats(), cfg.arak.p);
  const ChainResult r = Anneal(cfg, {.track_best = true, .initial = start});
  ASSERT_TRUE(r.best_state.has_value());
  EXPECT_EQ(r.best_state->num_edges(), 0);
  EXPECT_GE(r.report.best_objective, initial);
  EXPECT_NEAR(r.report.best_objective, 0.0, 1e-9);
}

TEST(AnnealTest, BestStateScoresItsReportedObjective) {
  const WorldSpec spec{.layout = Layout::kCorridor};
  const Coloring world = MakeWorld(spec);
  TrajectorySpec traj{.waypoints = DefaultRoute(spec), .spacing = 2.0, .laser_beams = 30};
  Rng rng(4);
  const ObservationSet data = SimulateScans(world, traj, {}, rng);
  SamplerConfig cfg;
  cfg.arak = {.p = 0.1, .window = world.window()};
  cfg.steps = 20000;
  cfg.temperature = {1.0, 0.05};
  const ChainResult r = Anneal(cfg, {.data = &data, .track_best = true});
  ASSERT_TRUE(r.best_state.has_value());
  EXPECT_TRUE(r.best_state->Validate().empty());
  LikelihoodState lik(data, {}, world.window());
  const double best = lik.RecomputeSerial(*r.best_state) - Potential(r.best_state->stats(), cfg.arak.p);
  EXPECT_NEAR(best, r.report.best_objective, 1e-6 * std::abs(best));
  const double empty = lik.RecomputeSerial(Coloring(world.window()));
  EXPECT_GE(r.report.best_objective, empty);
  EXPECT_GE(r.report.best_objective, r.report.final_objective);
}

TEST(ChainReportTest, WritesCountsAndTrace) {
  SamplerConfig cfg = PriorConfig(2000);
  const ChainResult r = RunChain(cfg, {});
  std::int64_t proposed = 0;
  for (const KindStats& k : r.report.kinds) {
    EXPECT_LE(k.accepted, k.valid);
    EXPECT_LE(k.valid, k.proposed);
    proposed += k.proposed;
  }
  EXPECT_EQ(proposed, r.report.proposals);
  EXPECT_EQ(r.report.proposals, 3000);
  std::ostringstream os;
  WriteChainReport(os, r.report);
  EXPECT_NE(os.str().find("kind triangle-birth"), std::string::npos);
  EXPECT_NE(os.str().find("trace"), std::string::npos);
}

}  // namespace
}  // namespace prf
