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

#include "prf/likelihood.h"

#include <algorithm>
#include <cmath>

#include "gtest/gtest.h"
#include "prf/arak_prior.h"
#include "prf/moves.h"
#include "prf/sim.h"
#include "testing.h"

namespace prf {
namespace {

const Rect kWindow{{0, 0}, {6, 6}};

ObservationSet MixedData(const Coloring& world, std::uint64_t seed, int poses) {
  Rng rng(seed);
  ObservationSet data;
  const SensorModel model;
  for (int made = 0; made < poses;) {
    const Pose pose{{UniformReal(rng, 0.5, 5.5), UniformReal(rng, 0.5, 5.5)},
                    UniformReal(rng, -3.14, 3.14)};
    if (world.ColorAt(pose.p) == Color::kBlack) continue;
    ++made;
    const auto scan = SimulateLaser(world, pose, 12, 3.14, 8.0, model.laser, rng);
    data.lasers.insert(data.lasers.end(), scan.begin(), scan.end());
    for (int k = 0; k < 4; ++k) {
      data.sonars.push_back(SimulateSonar(world, pose, k * 1.57, 0.17, 3.5, model.sonar, rng));
    }
    const Point2 q{UniformReal(rng, 0, 6), UniformReal(rng, 0, 6)};
    data.points.push_back({.q = q, .value = world.ColorAt(q) == Color::kBlack ? 1.0 : 0.0,
                           .sigma = 0.5});
  }
  return data;
}

TEST(ObservationIndexTest, AffectedExamples) {
  const Coloring c(kWindow);
  ObservationSet data;
  data.lasers.push_back({.pose = {{1, 1}, 0.0}, .range = 3.0, .max_range = 3.0, .max_flag = true});
  LikelihoodState state(data, {}, kWindow);
  state.Reset(c);
  const std::vector<Point2> far{{1.0, 5.0}, {2.0, 5.0}, {1.5, 5.5}};
  EXPECT_TRUE(state.index().Affected(far).empty());
  const std::vector<Point2> across{{2.0, 0.5}, {2.2, 0.5}, {2.1, 1.5}};
  EXPECT_EQ(state.index().Affected(across), std::vector<int>{0});
}

TEST(ObservationIndexTest, CellsFollowExtent) {
  Coloring c(kWindow);
  ObservationSet data;
  data.lasers.push_back({.pose = {{0.25, 3.25}, 0.0}, .range = 5.0, .max_range = 8.0});
  LikelihoodState state(data, {}, kWindow);
  state.Reset(c);
  EXPECT_EQ(state.index().CellsOf(0).size(), 12u);
  c.Apply(testing::TriangleEdit(c, {2.1, 2.6}, {2.4, 3.9}, {2.9, 3.1}));
  state.Reset(c);
  // Beam now stops inside the triangle's cell column.
  EXPECT_LE(state.index().CellsOf(0).size(), 6u);
}

TEST(LikelihoodStateTest, SerialAndParallelAgree) {
  std::mt19937_64 gen(3);
  for (int scene = 0; scene < 5; ++scene) {
    const Coloring world = testing::RandomColoring(gen, kWindow, 4, 2);
    const ObservationSet data = MixedData(world, scene + 1, 20);
    LikelihoodState state(data, {}, kWindow);
    const Coloring guess = testing::RandomColoring(gen, kWindow, 3, 1);
    state.Reset(guess);
    const double serial = state.RecomputeSerial(guess);
    EXPECT_EQ(serial, state.RecomputeParallel(guess));
    if (std::isfinite(serial)) EXPECT_NEAR(state.total(), serial, 1e-9 * std::abs(serial));
  }
}

// Runs a posterior chain, checking the cached total against from-scratch
// evaluation and that no observation outside the affected set changes.
TEST(LikelihoodStateTest, IncrementalMatchesRecompute) {
  std::mt19937_64 gen(4);
  const Coloring world = testing::RandomColoring(gen, kWindow, 5, 2);
  const ObservationSet data = MixedData(world, 9, 25);
  const SensorModel model;
  LikelihoodState state(data, model, kWindow);
  Coloring c(kWindow);
  state.Reset(c);
  Rng rng(5);
  const MoveParams params;
  int accepted = 0, proposals = 0;
  const int nl = static_cast<int>(data.lasers.size());
  const int ns = static_cast<int>(data.sonars.size());
  auto sensor = [&](int i) {
    if (i < nl) return data.lasers[i].pose.p;
    if (i < nl + ns) return data.sonars[i - nl].pose.p;
    return data.points[i - nl - ns].q;
  };
  while (accepted < 1500 && proposals < 200000) {
    ++proposals;
    auto applied = ProposeAndApply(c, params, rng);
    if (!applied) continue;
    const auto affected = state.index().Affected(applied->proposal.edit.region);
    const double delta = state.ProposeDelta(c, applied->proposal.edit);
    if (proposals % 20 == 0) {
      // Soundness: every observation whose value changes is affected.
      for (int i = 0; i < data.size(); ++i) {
        const bool black = c.ColorAt(sensor(i)) == Color::kBlack;
        const double exact = state.Evaluate(i, c, black).log_likelihood;
        const double old = state.value(i);
        const bool same = exact == old || std::abs(exact - old) <= 1e-9 * (1.0 + std::abs(old));
        if (!same) {
          ASSERT_TRUE(std::binary_search(affected.begin(), affected.end(), i))
              << MoveKindName(applied->proposal.kind) << " obs " << i;
        }
      }
    }
    const double a = AcceptanceLogRatio(LogDensityDelta(applied->record.delta, 0.5), delta,
                                        applied->proposal, 1.0);
    if (std::log(Uniform01(rng)) < a) {
      state.Commit();
      ++accepted;
      if (accepted % 100 == 0) {
        const double exact = state.RecomputeSerial(c);
        ASSERT_TRUE(std::isfinite(exact));
        EXPECT_NEAR(state.total(), exact, 1e-6 * std::abs(exact));
      }
    } else {
      state.Discard();
      c.Revert(std::move(applied->record));
    }
  }
  EXPECT_EQ(accepted, 1500);
  const double exact = state.RecomputeSerial(c);
  EXPECT_NEAR(state.total(), exact, 1e-6 * std::abs(exact));
}

TEST(LikelihoodStateTest, NegInfCountsRoundTrip) {
  Coloring c(kWindow);
  ObservationSet data;
  data.lasers.push_back({.pose = {{1, 1}, 0.0}, .range = 2.0, .max_range = 8.0});
  LikelihoodState state(data, {}, kWindow);
  state.Reset(c);
  const double empty_total = state.total();
  ASSERT_TRUE(std::isfinite(empty_total));
  const Edit cover = testing::TriangleEdit(c, {0.5, 0.5}, {1.6, 0.7}, {0.9, 1.8});
  ChangeRecord rec = c.Apply(cover);
  EXPECT_EQ(state.ProposeDelta(c, cover), -INFINITY);
  state.Commit();
  EXPECT_EQ(state.total(), -INFINITY);
  const Edit uncover = c.InverseEdit(cover, rec);
  c.Apply(uncover);
  EXPECT_EQ(state.ProposeDelta(c, uncover), INFINITY);
  state.Commit();
  EXPECT_NEAR(state.total(), empty_total, 1e-12);
}

}  // namespace
}  // namespace prf
