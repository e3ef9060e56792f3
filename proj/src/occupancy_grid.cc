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

#include "prf/occupancy_grid.h"

#include <cmath>

namespace prf {

OccupancyGrid::OccupancyGrid(const GridSpec& grid, const InverseSensorParams& params)
    : grid_(grid), params_(params), counts_(grid.num_cells()) {}

double OccupancyGrid::LogOdds(int cell) const {
  const Counts& n = counts_[cell];
  return n.laser_occupied * params_.laser_occupied - n.laser_free * params_.laser_free +
         n.sonar_occupied * params_.sonar_occupied - n.sonar_free * params_.sonar_free;
}

std::vector<double> OccupancyGrid::LogOdds() const {
  std::vector<double> out(counts_.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = LogOdds(static_cast<int>(i));
  return out;
}

double OccupancyGrid::Probability(int cell) const {
  return 1.0 / (1.0 + std::exp(-LogOdds(cell)));
}

std::vector<double> OccupancyGrid::Probabilities() const {
  std::vector<double> out(counts_.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = Probability(static_cast<int>(i));
  return out;
}

void OccupancyGrid::UpdateLaser(const LaserObs& o) {
  const Point2 u = UnitVector(o.direction());
  const double reach = o.max_flag ? o.max_range : o.range;
  const Point2 end = o.pose.p + reach * u;
  const auto cells = GridTraceSegment({o.pose.p, end}, grid_);
  if (o.max_flag || !grid_.window().Contains(end)) {
    for (CellIndex c : cells) ++counts_[grid_.Flat(c)].laser_free;
    return;
  }
  const CellIndex impact = grid_.CellOf(end);
  for (CellIndex c : cells) {
    if (c == impact) continue;
    ++counts_[grid_.Flat(c)].laser_free;
  }
  ++counts_[grid_.Flat(impact)].laser_occupied;
}

void OccupancyGrid::UpdateSonar(const SonarObs& o) {
  const Cone cone = o.cone();
  const double hw = params_.sonar_arc_half_width;
  const double reach = o.max_flag ? o.max_range : std::min(o.max_range, o.range + hw);
  const int steps = 8;
  const double step = 2.0 * cone.half_angle / steps;
  const double outer = reach / std::cos(0.5 * step);
  std::vector<Point2> poly{cone.apex};
  for (int k = 0; k <= steps; ++k) {
    poly.push_back(cone.apex + outer * UnitVector(cone.heading - cone.half_angle + k * step));
  }
  for (int cell : CellsOverlappingPolygon(poly, grid_)) {
    const Point2 d = grid_.CellCenter(grid_.Unflat(cell)) - cone.apex;
    const double dist = Norm(d);
    if (dist > reach) continue;
    if (std::abs(WrapAngle(std::atan2(d.y, d.x) - cone.heading)) > cone.half_angle) continue;
    if (o.max_flag) {
      ++counts_[cell].sonar_free;
    } else if (std::abs(dist - o.range) <= hw) {
      ++counts_[cell].sonar_occupied;
    } else if (dist < o.range - hw) {
      ++counts_[cell].sonar_free;
    }
  }
}

void OccupancyGrid::Update(const ObservationSet& data) {
  for (const LaserObs& o : data.lasers) UpdateLaser(o);
  for (const SonarObs& o : data.sonars) UpdateSonar(o);
}

}  // namespace prf
