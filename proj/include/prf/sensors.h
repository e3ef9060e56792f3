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

#ifndef PRF_SENSORS_H_
#define PRF_SENSORS_H_

#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "prf/coloring.h"
#include "prf/geometry.h"
#include "prf/visibility.h"

namespace prf {

struct Pose {
  Point2 p;
  double heading = 0.0;
};

struct LaserObs {
  Pose pose;
  // Relative to the pose heading.
  double bearing = 0.0;
  double range = 0.0;
  double max_range = 8.0;
  // Set for readings that reported no return.
  bool max_flag = false;

  double direction() const { return pose.heading + bearing; }
};

struct SonarObs {
  Pose pose;
  double bearing = 0.0;
  double half_angle = 10.0 * std::numbers::pi / 180.0;
  double range = 0.0;
  double max_range = 3.5;
  bool max_flag = false;

  Cone cone() const { return {pose.p, pose.heading + bearing, half_angle, max_range}; }
};

struct PointColorObs {
  Point2 q;
  double value = 0.0;
  double mu_black = 1.0;
  double mu_white = 0.0;
  double sigma = 1.0;
};

struct ObservationSet {
  std::vector<LaserObs> lasers;
  std::vector<SonarObs> sonars;
  std::vector<PointColorObs> points;

  int size() const {
    return static_cast<int>(lasers.size() + sonars.size() + points.size());
  }
};

struct LaserParams {
  // Noise standard deviation: max(sigma_floor, sigma_relative * expected range).
  double sigma_relative = 0.01;
  double sigma_floor = 0.01;
  double w_gauss = 0.9;
  double w_uniform = 0.05;
  double w_maxrange = 0.05;

  double Sigma(double expected) const {
    return std::max(sigma_floor, sigma_relative * expected);
  }
};

struct SonarParams {
  // Face logit: intercept + depth * depth + angle * (pi/2 - projection angle)
  // + subtended * subtended angle.
  double face_intercept = 2.05;
  double face_depth = -0.5;
  double face_angle = -3.5;
  double face_subtended = 8.0;
  // Corner logit: intercept + depth * depth.
  double corner_intercept = 1.0;
  double corner_depth = -1.0;
  double sigma = 0.05;
  double w_uniform = 0.3;
  double w_exponential = 0.3;
  double w_maxrange = 0.4;
  // Exponential outlier rate, 1/meters.
  double beta = 0.5;
};

// Throw std::invalid_argument on inconsistent parameters.
void CheckLaserParams(const LaserParams& p);
void CheckSonarParams(const SonarParams& p);

// Expected laser range along the beam: nearest edge, else window exit, capped
// at max range. hit is false when no edge is met within max range.
double ExpectedLaserRange(const LaserObs& o, const Coloring& c, bool* hit);

// Mixed density of a laser reading given the expected range: Gaussian about
// the hit, uniform outliers, and a max-range point mass that also absorbs
// the Gaussian mass beyond max range and beams that hit nothing.
double LaserReadingLogDensity(const LaserObs& o, double expected, bool hit,
                              const LaserParams& p);
double LaserLogLikelihood(const LaserObs& o, const Coloring& c, const LaserParams& p);

struct SonarFeature {
  VisibleFeature feature;
  // Independent return probability and sequential return probability.
  double q = 0.0;
  double r = 0.0;
};

// Independent return probability of one feature under the logistic model.
double ReturnProbability(const VisibleFeature& f, const SonarParams& p);
// r_f = q_f * prod_{g<f} (1 - q_g) for depth-sorted q.
std::vector<double> SequentialReturnProbabilities(std::span<const double> q);

// Visible features in the cone (corners are interior graph vertices), with
// their return probabilities, sorted by depth.
std::vector<SonarFeature> SonarFeatures(const SonarObs& o, const Coloring& c,
                                        const SonarParams& p);
double SonarReadingLogDensity(const SonarObs& o,
                              std::span<const SonarFeature> features,
                              const SonarParams& p);
double SonarLogLikelihood(const SonarObs& o, const Coloring& c, const SonarParams& p);

// Gaussian point-color term, without its constant.
double PointLogLikelihood(const PointColorObs& o, Color color);
double PointLogLikelihood(const PointColorObs& o, const Coloring& c);

struct SensorModel {
  LaserParams laser;
  SonarParams sonar;
};

}  // namespace prf

#endif  // PRF_SENSORS_H_
