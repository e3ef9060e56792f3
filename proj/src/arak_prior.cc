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

#include "prf/arak_prior.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace prf {

double UnnormalizedLogDensity(const CachedStats& stats, double p) {
  return stats.edge_count * std::log(p) - stats.sum_log_length +
         stats.sum_log_sin - 2.0 * p * stats.total_length;
}

double UnnormalizedLogDensity(const Coloring& coloring, const ArakParams& a) {
  return UnnormalizedLogDensity(coloring.stats(), a.p);
}

double LogDensityDelta(const StatsDelta& delta, double p) {
  if (delta.edge_count == 0 && delta.total_length == 0.0 &&
      delta.sum_log_length == 0.0 && delta.sum_log_sin == 0.0) {
    return 0.0;
  }
  return delta.edge_count * std::log(p) - delta.sum_log_length +
         delta.sum_log_sin - 2.0 * p * delta.total_length;
}

double MeasureLogDensity(const CachedStats& stats, double p) {
  return stats.edge_count * std::log(p) - stats.sum_log_length + stats.sum_log_sin;
}

double Potential(const CachedStats& stats, double p) {
  return 2.0 * p * stats.total_length;
}

double MeasureLogDensityDelta(const StatsDelta& delta, double p) {
  if (delta.edge_count == 0 && delta.sum_log_length == 0.0 && delta.sum_log_sin == 0.0) {
    return 0.0;
  }
  return delta.edge_count * std::log(p) - delta.sum_log_length + delta.sum_log_sin;
}

double PotentialDelta(const StatsDelta& delta, double p) {
  return 2.0 * p * delta.total_length;
}

double ExpectedEdgeCount(const ArakParams& a) {
  if (a.window.Width() != 1.0 || a.window.Height() != 1.0) {
    throw std::invalid_argument(
        "expected edge count has a closed form only for the unit square");
  }
  return 4.0 * a.p + 4.0 * std::numbers::pi * a.p * a.p;
}

double SameColorProbability(double p, double d) {
  return 0.5 * (1.0 + std::exp(-4.0 * p * d));
}

}  // namespace prf
