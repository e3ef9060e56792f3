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

#include "prf/coloring.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "prf/arak_prior.h"
#include "prf/map_io.h"
#include "testing.h"

namespace prf {
namespace {

const Rect kUnit{{0, 0}, {1, 1}};

bool Near(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

void ExpectStatsMatch(const Coloring& c) {
  const CachedStats fresh = c.RecomputeStats();
  EXPECT_EQ(c.stats().edge_count, fresh.edge_count);
  EXPECT_TRUE(Near(c.stats().total_length, fresh.total_length, 1e-9));
  EXPECT_TRUE(Near(c.stats().sum_log_length, fresh.sum_log_length, 1e-9));
  EXPECT_TRUE(Near(c.stats().sum_log_sin, fresh.sum_log_sin, 1e-9));
}

TEST(Coloring, EmptyIsUniform) {
  const Coloring c(kUnit);
  EXPECT_TRUE(c.Validate().empty());
  EXPECT_EQ(c.ColorAt({0.1, 0.9}), Color::kWhite);
  EXPECT_EQ(c.anchor(), (Point2{0.5, 0.5}));
}

TEST(Coloring, TriangleAwayFromAnchorIsBlack) {
  Coloring c(kUnit);
  c.Apply(testing::TriangleEdit(c, {0.1, 0.1}, {0.3, 0.1}, {0.1, 0.3}));
  EXPECT_TRUE(c.Validate().empty());
  EXPECT_EQ(c.anchor_color(), Color::kWhite);
  EXPECT_EQ(c.ColorAt({0.15, 0.15}), Color::kBlack);
  EXPECT_EQ(c.ColorAt({0.8, 0.8}), Color::kWhite);
}

TEST(Coloring, TriangleAroundAnchorFlipsIt) {
  Coloring c(kUnit);
  const Edit e = testing::TriangleEdit(c, {0.2, 0.2}, {0.9, 0.3}, {0.4, 0.9});
  EXPECT_TRUE(e.flip_anchor);
  c.Apply(e);
  EXPECT_EQ(c.anchor_color(), Color::kBlack);
  EXPECT_EQ(c.ColorAt({0.5, 0.5}), Color::kBlack);
  EXPECT_EQ(c.ColorAt({0.05, 0.95}), Color::kWhite);
}

TEST(Coloring, ValidateCrossingChords) {
  const std::vector<VertexRecord> v = {
      {0, {{0.0, 0.2}, VertexKind::kBoundary, 3.8}},
      {1, {{1.0, 0.3}, VertexKind::kBoundary, 1.3}},
      {2, {{0.2, 0.0}, VertexKind::kBoundary, 0.2}},
      {3, {{0.3, 1.0}, VertexKind::kBoundary, 2.7}}};
  const std::vector<EdgeRecord> e = {{0, {{0, 1}}}, {1, {{2, 3}}}};
  const Coloring c = Coloring::FromGraph(kUnit, 0.5, Color::kWhite, v, e);
  const auto violations = c.Validate();
  ASSERT_EQ(violations.size(), 1u);
  EXPECT_EQ(violations[0].kind, Violation::Kind::kCrossing);
}

TEST(Coloring, ValidateDegree) {
  const std::vector<VertexRecord> v = {
      {0, {{0.0, 0.2}, VertexKind::kBoundary, 3.8}},
      {1, {{0.3, 0.3}, VertexKind::kInterior}}};
  const std::vector<EdgeRecord> e = {{0, {{0, 1}}}};
  const Coloring c = Coloring::FromGraph(kUnit, 0.5, Color::kWhite, v, e);
  const auto violations = c.Validate();
  ASSERT_EQ(violations.size(), 1u);
  EXPECT_EQ(violations[0].kind, Violation::Kind::kDegree);
}

TEST(Coloring, ApplyRejectsMissingIds) {
  Coloring c(kUnit);
  Edit e;
  e.remove_edges = {4};
  EXPECT_THROW(c.Apply(e), std::invalid_argument);
  EXPECT_TRUE(c.SameGraph(Coloring(kUnit)));
  Edit dangling;
  dangling.add_vertices = {{{0.2, 0.2}}};
  dangling.add_edges = {{VertexRef::New(0), VertexRef::Existing(9)}};
  EXPECT_THROW(c.Apply(dangling), std::invalid_argument);
  EXPECT_EQ(c.num_interior(), 0);
}

TEST(Coloring, TriangleBirthThenDeathRestores) {
  Coloring c(kUnit);
  const Coloring before = c;
  const Edit birth = testing::TriangleEdit(c, {0.2, 0.2}, {0.9, 0.3}, {0.4, 0.9});
  const ChangeRecord rec = c.Apply(birth);
  c.Apply(c.InverseEdit(birth, rec));
  EXPECT_TRUE(c.SameGraph(before));
  EXPECT_EQ(c.stats().edge_count, 0);
  EXPECT_NEAR(c.stats().total_length, 0.0, 1e-12);
}

TEST(Coloring, ParityIsPathIndependent) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const Coloring c = testing::RandomColoring(rng, kUnit, 6, 4, 0.2);
    ASSERT_TRUE(c.Validate().empty());
    for (int q = 0; q < 300; ++q) {
      const Point2 p{u(rng), u(rng)}, m{u(rng), u(rng)};
      const int parity = c.CrossingParity(c.anchor(), m) ^ c.CrossingParity(m, p);
      const Color expect = parity ? Flip(c.anchor_color()) : c.anchor_color();
      EXPECT_EQ(c.ColorAt(p), expect);
    }
  }
}

TEST(Coloring, RevertIsExact) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (int trial = 0; trial < 50; ++trial) {
    Coloring c = testing::RandomColoring(rng, kUnit, 4, 3, 0.25);
    const Coloring snapshot = c;
    const CachedStats stats = c.stats();
    const EdgeGridIndex index = c.index();
    const Point2 a{u(rng), u(rng)};
    const Edit e = testing::TriangleEdit(c, a, {u(rng), u(rng)}, {u(rng), u(rng)});
    ChangeRecord rec = c.Apply(e);
    ExpectStatsMatch(c);
    c.Revert(std::move(rec));
    EXPECT_TRUE(c.SameGraph(snapshot));
    EXPECT_EQ(c.stats(), stats);
    EXPECT_TRUE(c.index() == index);
    EXPECT_EQ(std::vector<int>(c.edge_ids().begin(), c.edge_ids().end()),
              std::vector<int>(snapshot.edge_ids().begin(), snapshot.edge_ids().end()));
  }
}

TEST(Coloring, MoveUpdatesIndexAndStats) {
  Coloring c(kUnit, 0.25);
  const ChangeRecord birth = c.Apply(testing::TriangleEdit(c, {0.1, 0.1}, {0.3, 0.1}, {0.1, 0.3}));
  const int v = birth.new_vertex_ids[0];
  Edit move;
  move.move_vertices = {{v, {0.05, 0.07}}};
  const ChangeRecord rec = c.Apply(move);
  EXPECT_TRUE(c.LocallyValid(rec));
  EXPECT_TRUE(c.Validate().empty());
  ExpectStatsMatch(c);
  EXPECT_EQ(rec.touched_edges.size(), 2u);
}

TEST(MapIo, JsonRoundTripIsExact) {
  std::mt19937_64 rng(31);
  const Rect w{{-1.5, 0.25}, {3.1, 2.9}};
  const Coloring c = testing::RandomColoring(rng, w, 5, 3);
  const Coloring back = MapFromJson(MapToJson(c));
  EXPECT_TRUE(back.SameGraph(c));
  EXPECT_EQ(back.stats().edge_count, c.stats().edge_count);
  EXPECT_TRUE(Near(back.stats().sum_log_sin, c.stats().sum_log_sin, 1e-12));
  EXPECT_EQ(MapToJson(back), MapToJson(c));
  EXPECT_THROW(MapFromJson("{\"window\": 3}"), std::runtime_error);
}

TEST(ArakPrior, ExpectedEdgeCount) {
  EXPECT_NEAR(ExpectedEdgeCount({0.5, kUnit}), 5.1416, 1e-4);
  EXPECT_NEAR(ExpectedEdgeCount({0.1, kUnit}), 0.52566, 1e-5);
  EXPECT_THROW(ExpectedEdgeCount({0.1, Rect{{0, 0}, {2, 1}}}), std::invalid_argument);
}

TEST(ArakPrior, SameColorProbability) {
  EXPECT_DOUBLE_EQ(SameColorProbability(0.5, 0.0), 1.0);
  EXPECT_NEAR(SameColorProbability(0.5, 0.2), 0.5 * (1 + std::exp(-0.4)), 1e-15);
  EXPECT_NEAR(SameColorProbability(0.25, 1e6), 0.5, 1e-15);
}

TEST(ArakPrior, DensityOfEmptyAndSingleChord) {
  Coloring c(kUnit);
  EXPECT_EQ(UnnormalizedLogDensity(c, {0.5, kUnit}), 0.0);
  // Vertical chord x=0.3: two right angles, length 1.
  c.Apply(testing::ChordEdit(c, 0.3, 2.7));
  EXPECT_NEAR(UnnormalizedLogDensity(c, {0.5, kUnit}), std::log(0.5) - 1.0, 1e-12);
}

TEST(ArakPrior, DeltaMatchesDifference) {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  Coloring c = testing::RandomColoring(rng, kUnit, 3, 2, 0.25);
  for (int i = 0; i < 50; ++i) {
    const double before = UnnormalizedLogDensity(c.stats(), 0.7);
    ChangeRecord rec = c.Apply(testing::TriangleEdit(c, {u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}));
    const double after = UnnormalizedLogDensity(c.RecomputeStats(), 0.7);
    EXPECT_NEAR(LogDensityDelta(rec.delta, 0.7), after - before, 1e-9);
    c.Revert(std::move(rec));
  }
}

}  // namespace
}  // namespace prf
