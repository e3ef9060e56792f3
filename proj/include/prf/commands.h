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

#ifndef PRF_COMMANDS_H_
#define PRF_COMMANDS_H_

#include <iosfwd>
#include <optional>
#include <string>

#include "prf/prior_stats.h"
#include "prf/run_config.h"
#include "prf/scan_log.h"
#include "prf/sim.h"

namespace prf {

// Command bodies behind the prfmap tool. Each writes files under an output
// prefix, prints a summary to `out` and returns a process exit status.
// Errors are thrown.

struct SimulateOptions {
  WorldSpec world;
  TrajectorySpec trajectory;  // empty waypoints: the layout's default route
  RunConfig config;           // sensor model
  std::string out_prefix;     // writes <prefix>.log and <prefix>_truth.json
};
// Scan log of a simulated run, timestamps are pose indices.
ScanLog SimulateLog(const Coloring& world, const TrajectorySpec& traj, const SensorModel& model,
                    std::uint64_t seed);
int CmdSimulate(const SimulateOptions& o, std::ostream& out);

struct SampleOptions {
  std::string log_path;
  RunConfig config;
  std::string out_prefix;  // <prefix>_black.pgm, <prefix>_white.pgm, <prefix>_report.txt
  std::optional<std::string> truth_path;
};
int CmdSample(const SampleOptions& o, std::ostream& out);

struct MapOptions {
  std::string log_path;
  RunConfig config;
  std::string out_prefix;  // <prefix>.json and <prefix>.pgm
  std::optional<std::string> truth_path;
};
int CmdMap(const MapOptions& o, std::ostream& out);

struct BaselineOptions {
  std::string log_path;
  RunConfig config;
  std::string out_prefix;  // <prefix>.pgm
  std::optional<std::string> truth_path;
};
int CmdBaseline(const BaselineOptions& o, std::ostream& out);

// Nonzero status if any check fails.
int CmdPriorStats(const std::vector<PriorStatsOptions>& runs, std::ostream& out);

}  // namespace prf

#endif  // PRF_COMMANDS_H_
