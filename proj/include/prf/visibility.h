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

#ifndef PRF_VISIBILITY_H_
#define PRF_VISIBILITY_H_

#include <span>
#include <vector>

#include "prf/geometry.h"

namespace prf {

struct SweepSegment {
  Segment segment;
  int edge_id = -1;
  // Graph vertex ids of the endpoints; -1 when the endpoint is not a vertex.
  int vertex_a = -1;
  int vertex_b = -1;
  // Whether each endpoint may be reported as a corner feature.
  bool a_is_corner = true;
  bool b_is_corner = true;
};

enum class FeatureKind { kFace, kCorner };

struct VisibleFeature {
  FeatureKind kind = FeatureKind::kFace;
  // Visible sub-segment for faces; corner location in face.a for corners.
  Segment face;
  int edge_id = -1;
  int vertex_id = -1;
  // Distance from the apex to the closest visible point.
  double depth = 0.0;
  // Faces only: angle between the sight line to the closest point and the
  // surface, pi/2 at normal incidence.
  double projection_angle = 0.0;
  double subtended_angle = 0.0;
  // Angular extent relative to the cone heading.
  double angle_lo = 0.0;
  double angle_hi = 0.0;
};

// Radial scan-line visibility within a cone: the maximal unoccluded pieces of
// the input segments plus the visible corner vertices, sorted by depth.
// Input segments must not cross each other.
std::vector<VisibleFeature> VisibilitySweep(std::span<const SweepSegment> edges,
                                            const Cone& cone);

}  // namespace prf

#endif  // PRF_VISIBILITY_H_
