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

#ifndef PRF_OCCUPANCY_GRID_H_
#define PRF_OCCUPANCY_GRID_H_

#include <vector>

#include "prf/geometry.h"
#include "prf/sensors.h"

namespace prf {

struct InverseSensorParams {
  double laser_occupied = 0.4;
  double laser_free = 0.4;
  double sonar_occupied = 0.15;
  double sonar_free = 0.15;
  // Half-width of the sonar impact arc, meters.
  double sonar_arc_half_width = 0.05;
};

// Independent log-odds cells updated by inverse sensor models. Prior log-odds
// 0 (probability one half). Cells keep integer update counts, so the result
// does not depend on update order.
class OccupancyGrid {
 public:
  OccupancyGrid(const GridSpec& grid, const InverseSensorParams& params = {});

  const GridSpec& grid() const { return grid_; }
  std::vector<double> LogOdds() const;
  double LogOdds(int cell) const;
  double Probability(int cell) const;
  std::vector<double> Probabilities() const;

  // Cells the beam passes before impact become more likely free and the impact
  // cell more likely occupied; a max-range reading frees the whole beam.
  void UpdateLaser(const LaserObs& o);
  // Cells inside the cone short of the arc become more likely free and cells
  // on the arc more likely occupied; a max-range reading frees the whole cone.
  void UpdateSonar(const SonarObs& o);
  void Update(const ObservationSet& data);

 private:
  GridSpec grid_;
  InverseSensorParams params_;
  struct Counts {
    int laser_occupied = 0;
    int laser_free = 0;
    int sonar_occupied = 0;
    int sonar_free = 0;
  };
  std::vector<Counts> counts_;
};

}  // namespace prf

#endif  // PRF_OCCUPANCY_GRID_H_
