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

#ifndef PRF_TESTS_TESTING_H_
#define PRF_TESTS_TESTING_H_

#include <optional>
#include <ostream>
#include <random>
#include <vector>

#include "prf/coloring.h"
#include "prf/edge_grid_index.h"
#include "prf/geometry.h"
#include "prf/visibility.h"

namespace prf {

inline void PrintTo(CellIndex c, std::ostream* os) {
  *os << "(" << c.ix << "," << c.iy << ")";
}

}  // namespace prf

namespace prf::testing {

// Nearest hit over every segment, ties to the smaller id.
std::optional<RayHit> BruteForceRayCast(const std::vector<Segment>& segments,
                                        const std::vector<int>& ids,
                                        Point2 origin, double direction,
                                        double max_range);

// Cells whose closed box meets the segment, by testing every cell, sorted.
std::vector<CellIndex> BruteForceSupercover(const Segment& s, const GridSpec& g);

// Random non-crossing segments inside the window.
std::vector<Segment> RandomDisjointSegments(std::mt19937_64& rng,
                                            const Rect& window, int count,
                                            double max_length);

// Edits used to grow test colorings.
Edit TriangleEdit(const Coloring& c, Point2 a, Point2 b, Point2 d);
Edit ChordEdit(const Coloring& c, double s1, double s2);

// A valid coloring built from random triangles and chords.
Coloring RandomColoring(std::mt19937_64& rng, const Rect& window,
                        int triangles, int chords,
                        double index_cell_size = kDefaultIndexCellSize);

// Dense angular ray-casting oracle for a cone: nearest edge id per ray (-1 for
// none), with the ray angles relative to the heading.
struct DenseRays {
  std::vector<double> angles;
  std::vector<int> edge;
  std::vector<double> depth;
};
DenseRays DenseRayOracle(std::span<const SweepSegment> edges, const Cone& cone,
                         int rays);

}  // namespace prf::testing

#endif  // PRF_TESTS_TESTING_H_
