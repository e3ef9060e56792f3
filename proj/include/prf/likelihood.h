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

#ifndef PRF_LIKELIHOOD_H_
#define PRF_LIKELIHOOD_H_

#include <span>
#include <vector>

#include "prf/coloring.h"
#include "prf/sensors.h"

namespace prf {

inline constexpr double kDefaultObservationCellSize = 0.5;

// Grid of cells to observation ids. Each observation is registered in the
// cells overlapping its current sensitivity extent.
class ObservationIndex {
 public:
  ObservationIndex() = default;
  ObservationIndex(const GridSpec& grid, int num_observations);

  void Set(int obs, std::vector<int> cells);
  std::span<const int> CellsOf(int obs) const { return obs_cells_[obs]; }
  std::span<const int> ObservationsIn(int cell) const { return cells_[cell]; }
  const GridSpec& grid() const { return grid_; }

  // Observations registered in any cell overlapping the region, sorted.
  std::vector<int> Affected(std::span<const Point2> region) const;

 private:
  GridSpec grid_;
  std::vector<std::vector<int>> cells_;
  std::vector<std::vector<int>> obs_cells_;
  mutable std::vector<unsigned> stamp_;
  mutable unsigned epoch_ = 0;
};

// Per-observation log likelihood with the sensitivity extent it depends on.
struct ObservationEval {
  double log_likelihood = 0.0;
  std::vector<int> cells;
};

// Cached log likelihood of a data set under a coloring, updated locally as
// edits are proposed, accepted or rejected.
class LikelihoodState {
 public:
  // data must outlive the state.
  LikelihoodState(const ObservationSet& data, const SensorModel& model,
                  const Rect& window,
                  double cell_size = kDefaultObservationCellSize);

  // Evaluates every observation from scratch and rebuilds the index.
  void Reset(const Coloring& c);

  // Sum of cached terms; -inf if any term is -inf.
  double total() const;
  int num_observations() const { return static_cast<int>(values_.size()); }
  double value(int obs) const { return values_[obs]; }
  const ObservationIndex& index() const { return index_; }

  // Change in total log likelihood from the edit just applied to c. Only
  // observations indexed in cells overlapping the edit region are evaluated.
  // The result is held until Commit or Discard.
  double ProposeDelta(const Coloring& c, const Edit& edit);
  void Commit();
  void Discard();
  int last_affected() const { return static_cast<int>(pending_ids_.size()); }

  // Evaluates one observation, given the sensor color.
  ObservationEval Evaluate(int obs, const Coloring& c, bool sensor_black) const;

  // Total log likelihood from scratch, serial and OpenMP versions.
  double RecomputeSerial(const Coloring& c) const;
  double RecomputeParallel(const Coloring& c) const;

 private:
  Point2 SensorPoint(int obs) const;
  void SetValue(int obs, double v);

  const ObservationSet& data_;
  SensorModel model_;
  ObservationIndex index_;
  std::vector<double> values_;
  std::vector<char> sensor_black_;
  double finite_sum_ = 0.0;
  int num_neg_inf_ = 0;

  std::vector<int> pending_ids_;
  std::vector<ObservationEval> pending_evals_;
  std::vector<char> pending_black_;
};

}  // namespace prf

#endif  // PRF_LIKELIHOOD_H_
