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

#include "prf/sim.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "testing.h"

namespace prf {
namespace {

class WorldTest : public ::testing::TestWithParam<Layout> {};

TEST_P(WorldTest, ValidAndRouteInFreeSpace) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    WorldSpec spec;
    spec.layout = GetParam();
    spec.seed = seed;
    const Coloring world = MakeWorld(spec);
    EXPECT_TRUE(world.Validate().empty());
    EXPECT_EQ(world.anchor_color(), Color::kWhite);
    EXPECT_EQ(world.num_boundary(), 0);
    const auto route = DefaultRoute(spec);
    for (const Pose& pose : SamplePoses(route, 0.05)) {
      ASSERT_EQ(world.ColorAt(pose.p), Color::kWhite) << pose.p.x << " " << pose.p.y;
    }
    // Whole route segments stay clear of walls.
    for (size_t i = 0; i + 1 < route.size(); ++i) {
      EXPECT_EQ(world.CrossingParity(route[i], route[i + 1]), 0);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Layouts, WorldTest,
                         ::testing::Values(Layout::kCorridor, Layout::kLobby,
                                           Layout::kRoomsOffHallway));

TEST(WorldTest, CorridorIsTwoWallsWithEndCaps) {
  const Coloring world = MakeWorld({.layout = Layout::kCorridor});
  EXPECT_EQ(world.num_edges(), 4);
  EXPECT_EQ(world.ColorAt({6.0, 0.1}), Color::kBlack);
  EXPECT_EQ(world.ColorAt({6.0, 2.9}), Color::kBlack);
  EXPECT_EQ(world.ColorAt({0.1, 1.5}), Color::kBlack);
  EXPECT_EQ(world.ColorAt({11.9, 1.5}), Color::kBlack);
  EXPECT_EQ(world.ColorAt({6.0, 1.5}), Color::kWhite);
}

TEST(WorldTest, RoomsHaveDoorGaps) {
  WorldSpec spec{.layout = Layout::kRoomsOffHallway};
  const Coloring world = MakeWorld(spec);
  // Six rooms of eight vertices, plus four hallway corners.
  EXPECT_EQ(world.num_edges(), 6 * 8 + 4);
  const auto route = DefaultRoute(spec);
  int room_centers = 0;
  for (const Point2& p : route) {
    const bool in_hall = std::abs(p.y - world.window().Center().y) < 0.5;
    room_centers += !in_hall;
    EXPECT_EQ(world.ColorAt(p), Color::kWhite);
  }
  EXPECT_EQ(room_centers, 6);
}

TEST(WorldTest, InfeasibleSpecsThrow) {
  EXPECT_THROW(MakeWorld({.layout = Layout::kRoomsOffHallway, .door_width = 5.0}),
               std::invalid_argument);
  EXPECT_THROW(MakeWorld({.wall_thickness = 0.0}), std::invalid_argument);
  EXPECT_THROW(ParseLayout("atrium"), std::invalid_argument);
  EXPECT_EQ(ParseLayout(LayoutName(Layout::kLobby)), Layout::kLobby);
}

TEST(SamplePosesTest, SpacingAndHeading) {
  const std::vector<Point2> route{{0, 0}, {1, 0}, {1, 1}};
  const auto poses = SamplePoses(route, 0.25);
  ASSERT_EQ(poses.size(), 9u);
  for (size_t i = 0; i + 1 < poses.size(); ++i) {
    EXPECT_NEAR(Distance(poses[i].p, poses[i + 1].p) +
                    (i == 3 ? 0.0 : 0.0), 0.25, 0.25 - 0.25 / std::sqrt(2.0) + 1e-12);
  }
  EXPECT_DOUBLE_EQ(poses[0].heading, 0.0);
  EXPECT_DOUBLE_EQ(poses.back().heading, std::numbers::pi / 2);
}

// A single wall across the window at x = 2.
Coloring WallAt2() {
  Coloring c({{-4.0, -5.0}, {6.0, 5.0}});
  Edit e = testing::ChordEdit(c, PerimeterCoordinate(c.window(), {2.0, -5.0}),
                              PerimeterCoordinate(c.window(), {2.0, 5.0}));
  c.Apply(e);
  return c;
}

TEST(SimulateLaserTest, NoiseFreeWallReading) {
  const Coloring c = WallAt2();
  LaserParams exact{.sigma_relative = 0.0, .sigma_floor = 0.0, .w_gauss = 1.0,
                    .w_uniform = 0.0, .w_maxrange = 0.0};
  Rng rng(1);
  const auto scan = SimulateLaser(c, {{0, 0}, 0.0}, 1, 0.0, 8.0, exact, rng);
  ASSERT_EQ(scan.size(), 1u);
  EXPECT_DOUBLE_EQ(scan[0].range, 2.0);
  EXPECT_FALSE(scan[0].max_flag);
}

TEST(SimulateLaserTest, EmptyWorldIsAllMaxRange) {
  const Coloring c({{-10, -10}, {10, 10}});
  Rng rng(2);
  LaserParams exact{.w_gauss = 1.0, .w_uniform = 0.0, .w_maxrange = 0.0};
  for (const LaserObs& o : SimulateLaser(c, {{0, 0}, 0.3}, 180, std::numbers::pi, 8.0, exact, rng)) {
    EXPECT_TRUE(o.max_flag);
    EXPECT_EQ(o.range, 8.0);
  }
}

TEST(SimulateLaserTest, OccupiedPoseThrows) {
  const Coloring c = WallAt2();
  Rng rng(3);
  EXPECT_THROW(SimulateLaser(c, {{5, 0}, 0.0}, 1, 0.0, 8.0, {}, rng), std::invalid_argument);
  EXPECT_THROW(SimulateSonar(c, {{5, 0}, 0.0}, 0.0, 0.17, 3.5, {}, rng), std::invalid_argument);
}

// Chi-square style comparison: every bin frequency within 5 standard errors
// of the probability integrated from the likelihood density.
template <typename Density>
void ExpectHistogramMatches(const std::vector<double>& draws, int flagged, double max_range,
                            double flagged_mass, Density density, int bins) {
  const double n = draws.size() + flagged;
  EXPECT_NEAR(flagged / n, flagged_mass, 5 * std::sqrt(flagged_mass * (1 - flagged_mass) / n) + 1e-3);
  std::vector<int> counts(bins, 0);
  for (double r : draws) counts[std::min(bins - 1, static_cast<int>(r / max_range * bins))]++;
  double total = flagged_mass;
  for (int b = 0; b < bins; ++b) {
    const double lo = b * max_range / bins, hi = (b + 1) * max_range / bins;
    double mass = 0.0;
    const int steps = 2000;
    for (int k = 0; k < steps; ++k) {
      mass += density(lo + (k + 0.5) * (hi - lo) / steps) * (hi - lo) / steps;
    }
    total += mass;
    EXPECT_NEAR(counts[b] / n, mass, 5 * std::sqrt(mass * (1 - mass) / n) + 2e-4) << "bin " << b;
  }
  EXPECT_NEAR(total, 1.0, 1e-3);
}

TEST(SimulateLaserTest, HistogramMatchesLikelihood) {
  const Coloring c = WallAt2();
  const LaserParams params{.sigma_relative = 0.1};
  Rng rng(4);
  std::vector<double> draws;
  int flagged = 0;
  for (int i = 0; i < 100000; ++i) {
    const LaserObs o = SimulateLaser(c, {{0, 0}, 0.0}, 1, 0.0, 8.0, params, rng)[0];
    if (o.max_flag) ++flagged; else draws.push_back(o.range);
  }
  LaserObs probe{.pose = {{0, 0}, 0.0}};
  bool hit;
  const double expected = ExpectedLaserRange(probe, c, &hit);
  ASSERT_TRUE(hit);
  probe.max_flag = true;
  probe.range = 8.0;
  const double flagged_mass = std::exp(LaserReadingLogDensity(probe, expected, hit, params));
  probe.max_flag = false;
  ExpectHistogramMatches(draws, flagged, 8.0, flagged_mass, [&](double r) {
    probe.range = r;
    return std::exp(LaserReadingLogDensity(probe, expected, hit, params));
  }, 40);
}

TEST(SimulateSonarTest, HistogramMatchesLikelihood) {
  const Coloring c = WallAt2();
  const SonarParams params;
  Rng rng(5);
  const Pose pose{{0, 0}, 0.0};
  std::vector<double> draws;
  int flagged = 0, near_wall = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const SonarObs o = SimulateSonar(c, pose, 0.0, 0.17, 3.5, params, rng);
    if (o.max_flag) ++flagged; else draws.push_back(o.range);
    near_wall += std::abs(o.range - 2.0) < 0.2;
  }
  SonarObs probe{.pose = pose, .half_angle = 0.17};
  const auto features = SonarFeatures(probe, c, params);
  ASSERT_EQ(features.size(), 1u);
  // Perpendicular near wall: a return near the wall depth about q of the time.
  EXPECT_GT(features[0].q, 0.8);
  EXPECT_NEAR(near_wall / static_cast<double>(n), features[0].q, 0.01);
  probe.max_flag = true;
  probe.range = 3.5;
  const double flagged_mass = std::exp(SonarReadingLogDensity(probe, features, params));
  probe.max_flag = false;
  ExpectHistogramMatches(draws, flagged, 3.5, flagged_mass, [&](double r) {
    probe.range = r;
    return std::exp(SonarReadingLogDensity(probe, features, params));
  }, 35);
}

TEST(SimulateSonarTest, EmptyConeIsOutlier) {
  const Coloring c({{-10, -10}, {10, 10}});
  Rng rng(6);
  const SonarParams params;
  int flagged = 0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    flagged += SimulateSonar(c, {{0, 0}, 0.0}, 1.0, 0.17, 3.5, params, rng).max_flag;
  }
  EXPECT_NEAR(flagged / static_cast<double>(n), params.w_maxrange, 0.015);
}

TEST(SimulateScansTest, CountsAndDeterminism) {
  WorldSpec spec{.layout = Layout::kCorridor};
  const Coloring world = MakeWorld(spec);
  TrajectorySpec traj{.waypoints = DefaultRoute(spec), .sonar = true};
  Rng a(9), b(9);
  const ObservationSet da = SimulateScans(world, traj, {}, a);
  const ObservationSet db = SimulateScans(world, traj, {}, b);
  const size_t poses = SamplePoses(traj.waypoints, traj.spacing).size();
  EXPECT_EQ(da.lasers.size(), poses * 180);
  EXPECT_EQ(da.sonars.size(), poses * 16);
  ASSERT_EQ(da.lasers.size(), db.lasers.size());
  for (size_t i = 0; i < da.lasers.size(); ++i) EXPECT_EQ(da.lasers[i].range, db.lasers[i].range);
  for (const SonarObs& o : da.sonars) {
    EXPECT_LE(o.range, 3.5);
    if (o.range == 3.5) EXPECT_TRUE(o.max_flag);
  }
}

TEST(SimulateScansTest, TrueWorldScoresAboveShiftedWorld) {
  WorldSpec spec{.layout = Layout::kCorridor};
  const Coloring world = MakeWorld(spec);
  spec.wall_thickness = 0.75;  // walls moved 0.5 m inwards
  const Coloring shifted = MakeWorld(spec);
  TrajectorySpec traj{.waypoints = DefaultRoute(spec), .spacing = 1.0, .sonar = true};
  Rng rng(10);
  const SensorModel model;
  const ObservationSet data = SimulateScans(world, traj, model, rng);
  double laser_true = 0, laser_shift = 0, sonar_true = 0, sonar_shift = 0;
  for (const LaserObs& o : data.lasers) {
    laser_true += LaserLogLikelihood(o, world, model.laser);
    laser_shift += LaserLogLikelihood(o, shifted, model.laser);
  }
  for (const SonarObs& o : data.sonars) {
    sonar_true += SonarLogLikelihood(o, world, model.sonar);
    sonar_shift += SonarLogLikelihood(o, shifted, model.sonar);
  }
  EXPECT_GT(laser_true, laser_shift);
  EXPECT_GT(sonar_true, sonar_shift);
}

TEST(ClassificationAccuracyTest, Examples) {
  const Coloring truth = MakeWorld({.layout = Layout::kCorridor});
  const GridSpec grid(truth.window(), 0.05);
  std::vector<double> exact(grid.num_cells()), half(grid.num_cells(), 0.5), inverted(grid.num_cells());
  int free = 0, counted = 0;
  for (int i = 0; i < grid.num_cells(); ++i) {
    const Point2 c = grid.CellCenter(grid.Unflat(i));
    exact[i] = truth.ColorAt(c) == Color::kBlack ? 1.0 : 0.0;
    inverted[i] = 1.0 - exact[i];
    bool near = false;
    for (int e : truth.edge_ids()) near |= PointSegmentDistance(c, truth.EdgeSegment(e)) <= 0.025;
    if (!near) {
      ++counted;
      free += exact[i] == 0.0;
    }
  }
  EXPECT_EQ(ClassificationAccuracy(exact, grid, truth), 1.0);
  EXPECT_DOUBLE_EQ(ClassificationAccuracy(half, grid, truth), static_cast<double>(free) / counted);
  const double some = ClassificationAccuracy(half, grid, truth);
  std::vector<double> flipped_half(grid.num_cells(), 0.6);
  EXPECT_DOUBLE_EQ(ClassificationAccuracy(flipped_half, grid, truth), 1.0 - some);
  EXPECT_EQ(ClassificationAccuracy(inverted, grid, truth), 0.0);
  EXPECT_THROW(ClassificationAccuracy(std::vector<double>(3), grid, truth), std::invalid_argument);
}

}  // namespace
}  // namespace prf
