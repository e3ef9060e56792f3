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

#include "prf/sensors.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "prf/rng.h"
#include "testing.h"

namespace prf {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double Logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// Window with its anchor at x = 1; a wall across it at x = wall, black beyond.
Coloring WallAcross(double wall) {
  Coloring c({{-4.0, -5.0}, {6.0, 5.0}});
  c.Apply(testing::ChordEdit(c, PerimeterCoordinate(c.window(), {wall, -5.0}),
                             PerimeterCoordinate(c.window(), {wall, 5.0})));
  return c;
}

LaserObs Beam(double range, bool flag = false) {
  return {.pose = {{0, 0}, 0.0}, .bearing = 0.0, .range = range, .max_range = 8.0,
          .max_flag = flag};
}

TEST(LaserTest, SensorInBlackIsNegInf) {
  const Coloring c = WallAcross(2.0);
  LaserObs o = Beam(1.0);
  o.pose.p = {3.0, 0.0};
  EXPECT_EQ(LaserLogLikelihood(o, c, {}), -kInf);
}

TEST(LaserTest, EmptyColoringFlaggedReading) {
  const Coloring c({{-10, -10}, {10, 10}});
  const LaserParams p;
  // No edge within range: every Gaussian draw lands beyond max range.
  EXPECT_NEAR(LaserLogLikelihood(Beam(8.0, true), c, p),
              std::log(p.w_gauss + p.w_maxrange), 1e-12);
  // Unflagged readings see only the uniform outliers.
  EXPECT_NEAR(LaserLogLikelihood(Beam(3.0), c, p), std::log(p.w_uniform / 8.0), 1e-12);
}

TEST(LaserTest, WindowExitIsNotAHit) {
  const Coloring c({{-2, -2}, {2, 2}});
  bool hit = true;
  EXPECT_DOUBLE_EQ(ExpectedLaserRange(Beam(1.0), c, &hit), 2.0);
  EXPECT_FALSE(hit);
}

TEST(LaserTest, PeakAtWallAndMonotone) {
  const Coloring c = WallAcross(2.0);
  const LaserParams p;
  const double at_wall = LaserLogLikelihood(Beam(2.0), c, p);
  double previous = at_wall;
  for (double dr = 0.001; dr < 0.06; dr += 0.001) {
    const double above = LaserLogLikelihood(Beam(2.0 + dr), c, p);
    const double below = LaserLogLikelihood(Beam(2.0 - dr), c, p);
    EXPECT_LE(above, previous + 1e-12);
    EXPECT_NEAR(above, below, 1e-9);
    previous = above;
  }
  for (double r = 0.05; r < 8.0; r += 0.05) {
    EXPECT_LE(LaserLogLikelihood(Beam(r), c, p), at_wall);
  }
}

TEST(LaserTest, MatchesMixtureFormula) {
  const Coloring c = WallAcross(2.0);
  const LaserParams p;
  const double sigma = p.Sigma(2.0);
  for (double r : {0.3, 1.97, 2.0, 2.01, 5.0}) {
    const double z = (r - 2.0) / sigma;
    const double gauss = std::exp(-0.5 * z * z) / (sigma * std::sqrt(2 * std::numbers::pi));
    EXPECT_NEAR(LaserLogLikelihood(Beam(r), c, p),
                std::log(p.w_gauss * gauss + p.w_uniform / 8.0), 1e-9);
  }
}

TEST(LaserTest, ProperDensity) {
  for (double wall : {1.5, 2.0, 5.5, 7.99}) {
    const Coloring c = WallAcross(wall);
    const LaserParams p;
    double total = std::exp(LaserLogLikelihood(Beam(8.0, true), c, p));
    const int n = 400000;
    for (int i = 0; i < n; ++i) {
      total += std::exp(LaserLogLikelihood(Beam((i + 0.5) * 8.0 / n), c, p)) * 8.0 / n;
    }
    EXPECT_NEAR(total, 1.0, 1e-4) << wall;
  }
}

TEST(SonarTest, SequentialReturnExamples) {
  const std::vector<double> one{0.7};
  EXPECT_DOUBLE_EQ(SequentialReturnProbabilities(one)[0], 0.7);
  const std::vector<double> two{0.5, 0.8};
  const auto r = SequentialReturnProbabilities(two);
  EXPECT_DOUBLE_EQ(r[0], 0.5);
  EXPECT_DOUBLE_EQ(r[1], 0.4);
}

TEST(SonarTest, SequentialReturnBounds) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<double> q(1 + trial % 9);
    for (double& x : q) x = u(rng);
    const auto r = SequentialReturnProbabilities(q);
    double sum = 0.0, none = 1.0;
    for (size_t i = 0; i < q.size(); ++i) {
      EXPECT_GE(r[i], 0.0);
      EXPECT_LE(r[i], q[i]);
      sum += r[i];
      none *= 1.0 - q[i];
    }
    EXPECT_LE(sum, 1.0 + 1e-12);
    // Either some feature returns or none does.
    EXPECT_NEAR(sum + none, 1.0, 1e-12);
  }
}

TEST(SonarTest, DefaultReturnProbabilities) {
  const SonarParams p;
  VisibleFeature face{.kind = FeatureKind::kFace, .depth = 1.0,
                      .projection_angle = std::numbers::pi / 2,
                      .subtended_angle = 10.0 * std::numbers::pi / 180.0};
  EXPECT_NEAR(ReturnProbability(face, p), 0.95, 0.005);
  face.projection_angle = std::numbers::pi / 2 - std::numbers::pi / 3;
  EXPECT_LT(ReturnProbability(face, p), 0.5);
  face.projection_angle = std::numbers::pi / 2 - 0.3;
  EXPECT_NEAR(ReturnProbability(face, p),
              Logistic(2.05 - 0.5 - 3.5 * 0.3 + 8.0 * face.subtended_angle), 1e-12);
  VisibleFeature corner{.kind = FeatureKind::kCorner, .depth = 1.0};
  EXPECT_NEAR(ReturnProbability(corner, p), 0.5, 1e-12);
  corner.depth = 2.0;
  EXPECT_LT(ReturnProbability(corner, p), 0.5);
}

SonarObs Ping(double range, bool flag = false) {
  return {.pose = {{0, 0}, 0.0}, .bearing = 0.0,
          .half_angle = 10.0 * std::numbers::pi / 180.0, .range = range,
          .max_range = 3.5, .max_flag = flag};
}

double Outlier(const SonarParams& p, double r) {
  return p.w_uniform / 3.5 +
         p.w_exponential * p.beta * std::exp(-p.beta * r) / (1.0 - std::exp(-p.beta * 3.5));
}

TEST(SonarTest, NoFeaturesIsPureOutlier) {
  const Coloring c({{-10, -10}, {10, 10}});
  const SonarParams p;
  EXPECT_TRUE(SonarFeatures(Ping(1.0), c, p).empty());
  for (double r : {0.2, 1.0, 3.0}) {
    EXPECT_NEAR(SonarLogLikelihood(Ping(r), c, p), std::log(Outlier(p, r)), 1e-12);
  }
  EXPECT_NEAR(SonarLogLikelihood(Ping(3.5, true), c, p), std::log(p.w_maxrange), 1e-12);
}

TEST(SonarTest, PerpendicularWallDominates) {
  const Coloring c = WallAcross(1.5);
  const SonarParams p;
  const auto features = SonarFeatures(Ping(1.5), c, p);
  ASSERT_EQ(features.size(), 1u);
  EXPECT_EQ(features[0].feature.kind, FeatureKind::kFace);
  EXPECT_NEAR(features[0].feature.depth, 1.5, 1e-12);
  const double r = features[0].r;
  const double gauss = r / (p.sigma * std::sqrt(2 * std::numbers::pi));
  const double outlier = (1.0 - r) * Outlier(p, 1.5);
  EXPECT_GT(gauss, 20.0 * outlier);
  EXPECT_NEAR(SonarLogLikelihood(Ping(1.5), c, p), std::log(gauss + outlier), 1e-9);
}

TEST(SonarTest, SensorInBlackIsNegInf) {
  const Coloring c = WallAcross(1.5);
  SonarObs o = Ping(1.0);
  o.pose.p = {3.0, 0.0};
  EXPECT_EQ(SonarLogLikelihood(o, c, {}), -kInf);
}

TEST(SonarTest, ProperDensityOnRandomScenes) {
  std::mt19937_64 rng(12);
  const SonarParams p;
  for (int scene = 0; scene < 10; ++scene) {
    const Coloring c = testing::RandomColoring(rng, {{-3, -3}, {3, 3}}, 4, 2);
    SonarObs o = Ping(1.0);
    o.pose.p = {UniformReal(rng, -2, 2), UniformReal(rng, -2, 2)};
    o.bearing = UniformReal(rng, -3, 3);
    if (c.ColorAt(o.pose.p) == Color::kBlack) continue;
    const auto features = SonarFeatures(o, c, p);
    o.range = 3.5;
    o.max_flag = true;
    double total = std::exp(SonarReadingLogDensity(o, features, p));
    o.max_flag = false;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
      o.range = (i + 0.5) * 3.5 / n;
      const double log_density = SonarReadingLogDensity(o, features, p);
      ASSERT_TRUE(std::isfinite(log_density));
      total += std::exp(log_density) * 3.5 / n;
    }
    // Mass beyond max range sits on the flagged reading; the Gaussian tail
    // below zero is dropped.
    double tails = 0.0;
    for (const SonarFeature& f : features) {
      tails += f.r * 0.5 * std::erfc(f.feature.depth / (p.sigma * std::sqrt(2.0)));
    }
    EXPECT_NEAR(total + tails, 1.0, 1e-4) << scene;
  }
}

TEST(PointTest, Examples) {
  const PointColorObs white_mean{.q = {0, 0}, .value = 0.0, .mu_black = 1.0, .mu_white = 0.0};
  EXPECT_EQ(PointLogLikelihood(white_mean, Color::kWhite), 0.0);
  EXPECT_LT(PointLogLikelihood(white_mean, Color::kBlack), 0.0);
  const PointColorObs equal{.value = 0.3, .mu_black = 0.7, .mu_white = 0.7, .sigma = 0.5};
  EXPECT_EQ(PointLogLikelihood(equal, Color::kWhite), PointLogLikelihood(equal, Color::kBlack));
  const PointColorObs o{.value = 0.8, .mu_black = 2.0, .mu_white = -1.0, .sigma = 0.6};
  EXPECT_NEAR(PointLogLikelihood(o, Color::kBlack), -(0.8 - 2.0) * (0.8 - 2.0) / (2 * 0.36), 1e-12);
  EXPECT_NEAR(PointLogLikelihood(o, Color::kWhite), -(0.8 + 1.0) * (0.8 + 1.0) / (2 * 0.36), 1e-12);
  const Coloring c = WallAcross(2.0);
  PointColorObs at{.q = {3.0, 1.0}, .value = 1.0};
  EXPECT_EQ(PointLogLikelihood(at, c), 0.0);
  at.q = {0.0, 1.0};
  EXPECT_EQ(PointLogLikelihood(at, c), -0.5);
}

TEST(SensorParamsTest, Checks) {
  EXPECT_NO_THROW(CheckLaserParams({}));
  EXPECT_NO_THROW(CheckSonarParams({}));
  EXPECT_THROW(CheckLaserParams({.w_gauss = 0.5}), std::invalid_argument);
  EXPECT_THROW(CheckLaserParams({.sigma_floor = 0.0}), std::invalid_argument);
  EXPECT_THROW(CheckSonarParams({.beta = 0.0}), std::invalid_argument);
  EXPECT_THROW(CheckSonarParams({.sigma = -1.0}), std::invalid_argument);
}

TEST(SensorsTest, FiniteInWhiteSpace) {
  std::mt19937_64 rng(13);
  const SensorModel model;
  for (int scene = 0; scene < 20; ++scene) {
    const Coloring c = testing::RandomColoring(rng, {{-3, -3}, {3, 3}}, 5, 3);
    for (int k = 0; k < 50; ++k) {
      const Point2 q{UniformReal(rng, -2.9, 2.9), UniformReal(rng, -2.9, 2.9)};
      if (c.ColorAt(q) == Color::kBlack) continue;
      const double range = UniformReal(rng, 0.01, 3.5);
      LaserObs l{.pose = {q, 0.0}, .bearing = UniformReal(rng, -3, 3), .range = range};
      SonarObs s{.pose = {q, 0.0}, .bearing = UniformReal(rng, -3, 3), .range = range};
      EXPECT_TRUE(std::isfinite(LaserLogLikelihood(l, c, model.laser)));
      EXPECT_TRUE(std::isfinite(SonarLogLikelihood(s, c, model.sonar)));
    }
  }
}

}  // namespace
}  // namespace prf
