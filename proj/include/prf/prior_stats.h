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

#ifndef PRF_PRIOR_STATS_H_
#define PRF_PRIOR_STATS_H_

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace prf {

// Prior-only chains on the unit square, checked against the closed-form edge
// count and two-point same-color probability.
struct PriorStatsOptions {
  double p = 0.5;
  std::int64_t burn_in = 500000;
  std::int64_t steps = 2000000;
  std::int64_t thin = 50;
  int chains = 1;
  std::uint64_t seed = 1;
  std::vector<double> distances = {0.05, 0.1, 0.2, 0.4};
  int pairs_per_distance = 400;
  double edge_tolerance = 0.05;  // relative
  double pair_tolerance = 0.02;  // absolute
};

struct PairStat {
  double distance = 0.0;
  double observed = 0.0;
  double expected = 0.0;
  bool pass = false;
};

struct PriorStatsResult {
  double p = 0.0;
  double mean_edges = 0.0;
  double expected_edges = 0.0;
  double edge_relative_error = 0.0;
  bool edges_pass = false;
  std::vector<PairStat> pairs;
  std::int64_t samples = 0;
  std::int64_t proposals = 0;
  double seconds = 0.0;

  bool pairs_pass() const;
};

PriorStatsResult RunPriorStats(const PriorStatsOptions& options);

// One PASS/FAIL line per check.
void WritePriorStats(std::ostream& os, const PriorStatsResult& r);

}  // namespace prf

#endif  // PRF_PRIOR_STATS_H_
