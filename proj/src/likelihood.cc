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
#include <limits>

#include "prf/edge_grid_index.h"

namespace prf {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::vector<int> SegmentCells(const Segment& s, const GridSpec& g) {
  std::vector<int> out;
  for (CellIndex c : GridTraceSegment(s, g)) out.push_back(g.Flat(c));
  return out;
}

// Cells under a sector of the cone truncated at radius r, via a
// circumscribing polygon.
std::vector<int> SectorCells(const Cone& cone, double r, const GridSpec& g) {
  const int steps = 8;
  const double step = 2.0 * cone.half_angle / steps;
  const double reach = r / std::cos(0.5 * step);
  std::vector<Point2> poly{cone.apex};
  for (int k = 0; k <= steps; ++k) {
    poly.push_back(cone.apex + reach * UnitVector(cone.heading - cone.half_angle + k * step));
  }
  return CellsOverlappingPolygon(poly, g);
}

}  // namespace

ObservationIndex::ObservationIndex(const GridSpec& grid, int num_observations)
    : grid_(grid),
      cells_(grid.num_cells()),
      obs_cells_(num_observations),
      stamp_(num_observations, 0) {}

void ObservationIndex::Set(int obs, std::vector<int> cells) {
  for (int cell : obs_cells_[obs]) {
    auto& list = cells_[cell];
    const auto it = std::find(list.begin(), list.end(), obs);
    *it = list.back();
    list.pop_back();
  }
  for (int cell : cells) cells_[cell].push_back(obs);
  obs_cells_[obs] = std::move(cells);
}

std::vector<int> ObservationIndex::Affected(std::span<const Point2> region) const {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  std::vector<int> out;
  for (int cell : CellsOverlappingPolygon(region, grid_)) {
    for (int obs : cells_[cell]) {
      if (stamp_[obs] != epoch_) {
        stamp_[obs] = epoch_;
        out.push_back(obs);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

LikelihoodState::LikelihoodState(const ObservationSet& data,
                                 const SensorModel& model, const Rect& window,
                                 double cell_size)
    : data_(data),
      model_(model),
      index_(GridSpec(window, cell_size), data.size()),
      values_(data.size(), 0.0),
      sensor_black_(data.size(), 0) {
  CheckLaserParams(model.laser);
  CheckSonarParams(model.sonar);
}

Point2 LikelihoodState::SensorPoint(int obs) const {
  const int nl = static_cast<int>(data_.lasers.size());
  const int ns = static_cast<int>(data_.sonars.size());
  if (obs < nl) return data_.lasers[obs].pose.p;
  if (obs < nl + ns) return data_.sonars[obs - nl].pose.p;
  return data_.points[obs - nl - ns].q;
}

ObservationEval LikelihoodState::Evaluate(int obs, const Coloring& c,
                                          bool sensor_black) const {
  const GridSpec& g = index_.grid();
  const int nl = static_cast<int>(data_.lasers.size());
  const int ns = static_cast<int>(data_.sonars.size());
  ObservationEval out;
  if (obs < nl) {
    const LaserObs& o = data_.lasers[obs];
    bool hit = false;
    const double expected = ExpectedLaserRange(o, c, &hit);
    out.log_likelihood = sensor_black ? kNegInf
                                      : LaserReadingLogDensity(o, expected, hit, model_.laser);
    out.cells = SegmentCells({o.pose.p, o.pose.p + expected * UnitVector(o.direction())}, g);
  } else if (obs < nl + ns) {
    const SonarObs& o = data_.sonars[obs - nl];
    const auto features = SonarFeatures(o, c, model_.sonar);
    out.log_likelihood = sensor_black ? kNegInf
                                      : SonarReadingLogDensity(o, features, model_.sonar);
    // Contacts along the cone: the extent stops at the farthest one only if
    // faces cover the whole aperture.
    double covered = 0.0, farthest = 0.0;
    for (const SonarFeature& f : features) {
      if (f.feature.kind != FeatureKind::kFace) continue;
      covered += f.feature.subtended_angle;
      farthest = std::max(farthest, std::max(Norm(f.feature.face.a - o.pose.p),
                                             Norm(f.feature.face.b - o.pose.p)));
    }
    const bool full = covered >= 2.0 * o.half_angle * (1.0 - 1e-12);
    out.cells = SectorCells(o.cone(), full ? farthest : o.max_range, g);
  } else {
    const PointColorObs& o = data_.points[obs - nl - ns];
    out.log_likelihood = PointLogLikelihood(o, sensor_black ? Color::kBlack : Color::kWhite);
    out.cells = {g.Flat(g.CellOf(o.q))};
  }
  return out;
}

void LikelihoodState::SetValue(int obs, double v) {
  const double old = values_[obs];
  if (old == kNegInf) {
    --num_neg_inf_;
  } else {
    finite_sum_ -= old;
  }
  if (v == kNegInf) {
    ++num_neg_inf_;
  } else {
    finite_sum_ += v;
  }
  values_[obs] = v;
}

void LikelihoodState::Reset(const Coloring& c) {
  const int n = num_observations();
  std::vector<ObservationEval> evals(n);
  #pragma omp parallel for schedule(dynamic, 16)
  for (int i = 0; i < n; ++i) {
    const bool black = c.ColorAt(SensorPoint(i)) == Color::kBlack;
    sensor_black_[i] = black;
    evals[i] = Evaluate(i, c, black);
  }
  finite_sum_ = 0.0;
  num_neg_inf_ = 0;
  for (int i = 0; i < n; ++i) {
    values_[i] = evals[i].log_likelihood;
    if (values_[i] == kNegInf) {
      ++num_neg_inf_;
    } else {
      finite_sum_ += values_[i];
    }
    index_.Set(i, std::move(evals[i].cells));
  }
  pending_ids_.clear();
  pending_evals_.clear();
  pending_black_.clear();
}

double LikelihoodState::total() const {
  return num_neg_inf_ > 0 ? kNegInf : finite_sum_;
}

double LikelihoodState::ProposeDelta(const Coloring& c, const Edit& edit) {
  pending_ids_ = index_.Affected(edit.region);
  pending_evals_.resize(pending_ids_.size());
  pending_black_.resize(pending_ids_.size());
  double delta = 0.0;
  int inf_before = 0, inf_after = 0;
  for (size_t k = 0; k < pending_ids_.size(); ++k) {
    const int obs = pending_ids_[k];
    // The edit flips exactly the points inside its region.
    const bool black = sensor_black_[obs] != PolygonContains(edit.region, SensorPoint(obs));
    pending_black_[k] = black;
    pending_evals_[k] = Evaluate(obs, c, black);
    const double before = values_[obs], after = pending_evals_[k].log_likelihood;
    inf_before += before == kNegInf;
    inf_after += after == kNegInf;
    if (before != kNegInf && after != kNegInf) delta += after - before;
  }
  // From an impossible state, fewer impossible terms count as an infinite
  // improvement so the chain can leave it.
  if (inf_after > inf_before) return kNegInf;
  if (inf_after < inf_before) return std::numeric_limits<double>::infinity();
  return delta;
}

void LikelihoodState::Commit() {
  for (size_t k = 0; k < pending_ids_.size(); ++k) {
    const int obs = pending_ids_[k];
    SetValue(obs, pending_evals_[k].log_likelihood);
    sensor_black_[obs] = pending_black_[k];
    index_.Set(obs, std::move(pending_evals_[k].cells));
  }
  Discard();
}

void LikelihoodState::Discard() {
  pending_ids_.clear();
  pending_evals_.clear();
  pending_black_.clear();
}

double LikelihoodState::RecomputeSerial(const Coloring& c) const {
  double sum = 0.0;
  for (int i = 0; i < num_observations(); ++i) {
    const bool black = c.ColorAt(SensorPoint(i)) == Color::kBlack;
    const double v = Evaluate(i, c, black).log_likelihood;
    if (v == kNegInf) return kNegInf;
    sum += v;
  }
  return sum;
}

double LikelihoodState::RecomputeParallel(const Coloring& c) const {
  const int n = num_observations();
  double sum = 0.0;
  int neg_inf = 0;
  #pragma omp parallel for schedule(dynamic, 16) reduction(+ : sum, neg_inf)
  for (int i = 0; i < n; ++i) {
    const bool black = c.ColorAt(SensorPoint(i)) == Color::kBlack;
    const double v = Evaluate(i, c, black).log_likelihood;
    if (v == kNegInf) {
      ++neg_inf;
    } else {
      sum += v;
    }
  }
  return neg_inf > 0 ? kNegInf : sum;
}

}  // namespace prf
