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

#ifndef PRF_SIM_H_
#define PRF_SIM_H_

#include <cstdint>
#include <string>
#include <vector>

#include "prf/coloring.h"
#include "prf/rng.h"
#include "prf/sensors.h"

namespace prf {

enum class Layout { kCorridor, kLobby, kRoomsOffHallway };

// Throws std::invalid_argument for unknown names.
Layout ParseLayout(const std::string& name);
std::string LayoutName(Layout layout);

struct WorldSpec {
  Layout layout = Layout::kCorridor;
  double wall_thickness = 0.25;
  double door_width = 0.9;
  // Moves pillars and doors by up to a few centimeters.
  std::uint64_t seed = 1;
};

// Ground truth: free space white, walls and everything behind them black.
// Throws std::invalid_argument if the world cannot be built.
Coloring MakeWorld(const WorldSpec& spec);

// Waypoints through the free space of a layout, visiting every room.
std::vector<Point2> DefaultRoute(const WorldSpec& spec);

struct TrajectorySpec {
  std::vector<Point2> waypoints;
  // Distance between scan poses along the route.
  double spacing = 0.36;
  int laser_beams = 180;
  double laser_fov = 3.141592653589793;
  double laser_max_range = 8.0;
  int sonar_count = 16;
  double sonar_half_angle = 10.0 * 3.141592653589793 / 180.0;
  double sonar_max_range = 3.5;
  bool laser = true;
  bool sonar = false;
};

// Poses every spacing meters along the waypoint polyline, heading along it.
std::vector<Pose> SamplePoses(std::span<const Point2> waypoints, double spacing);

// Draws readings from the same mixtures the likelihoods use. Throws
// std::invalid_argument if the pose is in occupied space.
std::vector<LaserObs> SimulateLaser(const Coloring& world, const Pose& pose,
                                    int beams, double fov, double max_range,
                                    const LaserParams& params, Rng& rng);
SonarObs SimulateSonar(const Coloring& world, const Pose& pose, double bearing,
                       double half_angle, double max_range,
                       const SonarParams& params, Rng& rng);
ObservationSet SimulateScans(const Coloring& world, const TrajectorySpec& traj,
                             const SensorModel& model, Rng& rng);

// Fraction of cells whose thresholded P(black) (occupied if above threshold)
// matches the truth color at the cell center, excluding cells whose center is
// within half a cell of a truth edge. Throws std::invalid_argument on a size
// mismatch.
double ClassificationAccuracy(std::span<const double> p_black,
                              const GridSpec& grid, const Coloring& truth,
                              double threshold = 0.5);

}  // namespace prf

#endif  // PRF_SIM_H_
