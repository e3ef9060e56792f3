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

#ifndef PRF_EDGE_GRID_INDEX_H_
#define PRF_EDGE_GRID_INDEX_H_

#include <optional>
#include <span>
#include <vector>

#include "prf/geometry.h"

namespace prf {

// Uniform grid mapping each cell to the ids of the edges whose supercover
// includes it. Per-cell id lists are kept sorted so the index state does not
// depend on insertion order.
class EdgeGridIndex {
 public:
  EdgeGridIndex() = default;
  explicit EdgeGridIndex(const GridSpec& grid);

  void Insert(int id, const Segment& s);
  void Remove(int id);

  bool Contains(int id) const {
    return id >= 0 && id < static_cast<int>(present_.size()) && present_[id];
  }
  const Segment& segment(int id) const { return segments_[id]; }
  std::span<const int> EdgesInCell(int flat) const { return cells_[flat]; }
  std::span<const CellIndex> CellsOf(int id) const { return edge_cells_[id]; }
  const GridSpec& grid() const { return grid_; }
  int size() const { return count_; }

  // Edges other than id sharing at least one cell with it, sorted.
  std::vector<int> CoIndexed(int id) const;
  // Number of edges CoIndexed(id) would return.
  int CoIndexedCount(int id) const;
  // Edges indexed in any cell the segment passes through, sorted.
  std::vector<int> Candidates(const Segment& s) const;

  friend bool operator==(const EdgeGridIndex& a, const EdgeGridIndex& b);

 private:
  GridSpec grid_;
  std::vector<std::vector<int>> cells_;
  std::vector<Segment> segments_;
  std::vector<std::vector<CellIndex>> edge_cells_;
  std::vector<char> present_;
  int count_ = 0;
};

struct RayHit {
  double distance = 0.0;
  int edge = -1;
};

// Nearest edge hit along the ray within max_range, found by walking grid cells
// front to back and testing only the edges indexed there. Ties in distance go
// to the smaller edge id.
std::optional<RayHit> RayCast(const EdgeGridIndex& index, Point2 origin,
                              double direction, double max_range);

}  // namespace prf

#endif  // PRF_EDGE_GRID_INDEX_H_
