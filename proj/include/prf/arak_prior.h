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

#ifndef PRF_ARAK_PRIOR_H_
#define PRF_ARAK_PRIOR_H_

#include "prf/coloring.h"
#include "prf/geometry.h"

namespace prf {

struct ArakParams {
  // Scale parameter, 1/meters.
  double p = 0.1;
  Rect window;
};

// |E| log p - sum log|e| + sum log sin(phi_v) - 2p sum|e|. The base measure
// and the normalizer are constant across states and omitted.
double UnnormalizedLogDensity(const CachedStats& stats, double p);
double UnnormalizedLogDensity(const Coloring& coloring, const ArakParams& a);

// Change in the log density from the terms of the elements an edit touched.
double LogDensityDelta(const StatsDelta& delta, double p);

// The density splits into the base measure, |E| log p - sum log|e| +
// sum log sin(phi_v), and the Gibbs potential 2p sum|e|. Annealing tempers
// only the potential.
double MeasureLogDensity(const CachedStats& stats, double p);
double Potential(const CachedStats& stats, double p);
double MeasureLogDensityDelta(const StatsDelta& delta, double p);
double PotentialDelta(const StatsDelta& delta, double p);

// Mean number of edges in the unit square, 4p + 4 pi p^2. Throws
// std::invalid_argument for any other window.
double ExpectedEdgeCount(const ArakParams& a);

// Probability that two points at distance d share a color, (1 + e^{-4pd})/2.
double SameColorProbability(double p, double d);

}  // namespace prf

#endif  // PRF_ARAK_PRIOR_H_
