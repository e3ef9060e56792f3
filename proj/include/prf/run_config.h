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

#ifndef PRF_RUN_CONFIG_H_
#define PRF_RUN_CONFIG_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "prf/chain.h"
#include "prf/occupancy_grid.h"
#include "prf/sensors.h"

namespace prf {

inline constexpr const char* kConfigEnvVar = "PRFMAP_CONFIG";

// Everything a run reads besides the scan log. Sampling runs at temperature 1;
// the anneal schedule is used by map runs only.
struct RunConfig {
  SamplerConfig sampler;
  SensorModel sensors;
  InverseSensorParams baseline;
  TemperatureSchedule anneal{1.0, 0.01};
  std::int64_t anneal_steps = 2000000;
  int chains = 1;

  RunConfig();
};

struct ConfigKey {
  std::string name;
  std::string doc;
};
// All keys in print order, with descriptions.
std::vector<ConfigKey> ConfigKeys();

// Throws std::invalid_argument for unknown keys or unparseable values.
void SetConfigValue(RunConfig* cfg, std::string_view key, std::string_view value);
std::string GetConfigValue(const RunConfig& cfg, std::string_view key);
// Applies one "key=value" assignment.
void ApplyAssignment(RunConfig* cfg, std::string_view assignment);

// key=value lines, '#' comments and blank lines ignored. Errors name the line.
RunConfig ParseRunConfig(std::istream& in, const std::string& source = "<config>");
void ParseRunConfigInto(std::istream& in, const std::string& source, RunConfig* cfg);
// Every key, round-trip precision.
void WriteRunConfig(std::ostream& out, const RunConfig& cfg);
RunConfig ReadRunConfigFile(const std::string& path);

bool SameRunConfig(const RunConfig& a, const RunConfig& b);

}  // namespace prf

#endif  // PRF_RUN_CONFIG_H_
