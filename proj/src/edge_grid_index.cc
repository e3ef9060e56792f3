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

#include "prf/edge_grid_index.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace prf {

EdgeGridIndex::EdgeGridIndex(const GridSpec& grid)
    : grid_(grid), cells_(grid.num_cells()) {}

void EdgeGridIndex::Insert(int id, const Segment& s) {
  if (id >= static_cast<int>(present_.size())) {
    present_.resize(id + 1, 0);
    segments_.resize(id + 1);
    edge_cells_.resize(id + 1);
  }
  present_[id] = 1;
  segments_[id] = s;
  edge_cells_[id] = GridTraceSegment(s, grid_);
  for (const CellIndex c : edge_cells_[id]) {
    auto& list = cells_[grid_.Flat(c)];
    list.insert(std::lower_bound(list.begin(), list.end(), id), id);
  }
  ++count_;
}

void EdgeGridIndex::Remove(int id) {
  for (const CellIndex c : edge_cells_[id]) {
    auto& list = cells_[grid_.Flat(c)];
    list.erase(std::lower_bound(list.begin(), list.end(), id));
  }
  edge_cells_[id].clear();
  present_[id] = 0;
  --count_;
}

std::vector<int> EdgeGridIndex::CoIndexed(int id) const {
  std::vector<int> out;
  for (const CellIndex c : edge_cells_[id]) {
    for (int other : cells_[grid_.Flat(c)]) {
      if (other != id) out.push_back(other);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int EdgeGridIndex::CoIndexedCount(int id) const {
  return static_cast<int>(CoIndexed(id).size());
}

std::vector<int> EdgeGridIndex::Candidates(const Segment& s) const {
  std::vector<int> out;
  for (const CellIndex c : GridTraceSegment(s, grid_)) {
    const auto& list = cells_[grid_.Flat(c)];
    out.insert(out.end(), list.begin(), list.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool operator==(const EdgeGridIndex& a, const EdgeGridIndex& b) {
  if (!(a.grid_ == b.grid_) || a.cells_ != b.cells_ || a.count_ != b.count_) {
    return false;
  }
  const size_t n = std::max(a.present_.size(), b.present_.size());
  for (size_t i = 0; i < n; ++i) {
    const bool pa = a.Contains(static_cast<int>(i));
    if (pa != b.Contains(static_cast<int>(i))) return false;
    if (pa && !(a.segments_[i] == b.segments_[i])) return false;
  }
  return true;
}

std::optional<RayHit> RayCast(const EdgeGridIndex& index, Point2 origin,
                              double direction, double max_range) {
  const GridSpec& g = index.grid();
  const Point2 u = UnitVector(direction);
  const double cs = g.cell_size();
  const Point2 lo = g.window().min;
  CellIndex cell = g.CellOf(origin);
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const int step_x = u.x > 0.0 ? 1 : (u.x < 0.0 ? -1 : 0);
  const int step_y = u.y > 0.0 ? 1 : (u.y < 0.0 ? -1 : 0);
  double t_max_x = kInf, t_max_y = kInf;
  if (step_x > 0) t_max_x = (lo.x + (cell.ix + 1) * cs - origin.x) / u.x;
  if (step_x < 0) t_max_x = (lo.x + cell.ix * cs - origin.x) / u.x;
  if (step_y > 0) t_max_y = (lo.y + (cell.iy + 1) * cs - origin.y) / u.y;
  if (step_y < 0) t_max_y = (lo.y + cell.iy * cs - origin.y) / u.y;
  const double dt_x = step_x != 0 ? cs / std::abs(u.x) : kInf;
  const double dt_y = step_y != 0 ? cs / std::abs(u.y) : kInf;

  std::optional<RayHit> best;
  while (true) {
    for (int id : index.EdgesInCell(g.Flat(cell))) {
      const auto t = RaySegmentIntersection(origin, u, index.segment(id));
      if (!t || *t > max_range) continue;
      if (!best || *t < best->distance ||
          (*t == best->distance && id < best->edge)) {
        best = RayHit{*t, id};
      }
    }
    const double t_exit = std::min(t_max_x, t_max_y);
    if (best && best->distance <= t_exit) break;
    if (t_exit > max_range) break;
    if (t_max_x < t_max_y) {
      cell.ix += step_x;
      t_max_x += dt_x;
    } else {
      cell.iy += step_y;
      t_max_y += dt_y;
    }
    if (!g.InBounds(cell)) break;
  }
  return best;
}

}  // namespace prf
