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

#ifndef PRF_SCAN_LOG_H_
#define PRF_SCAN_LOG_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "prf/sensors.h"

namespace prf {

// Text scan log. Records:
//   LASER <t> <x> <y> <theta> <bearing> <range> <maxflag>
//   SONAR <t> <x> <y> <theta> <bearing> <half_angle> <range> <maxflag>
//   POINT <x> <y> <value> <mu_black> <mu_white> <sigma>
// Header lines start with '#':
//   # window <xmin> <ymin> <xmax> <ymax>
//   # laser_max_range <meters>
//   # sonar_max_range <meters>
// Other '#' lines are comments. Headers must precede the records.
struct ScanLog {
  std::optional<Rect> window;
  double laser_max_range = 8.0;
  double sonar_max_range = 3.5;
  ObservationSet data;
  // Timestamps, parallel to data.lasers and data.sonars.
  std::vector<double> laser_time;
  std::vector<double> sonar_time;
};

// Throws std::runtime_error naming the source and line for malformed input.
ScanLog ParseScanLog(std::istream& in, const std::string& source = "<input>");
// Round-trips exactly through ParseScanLog.
void WriteScanLog(std::ostream& out, const ScanLog& log);

ScanLog ReadScanLogFile(const std::string& path);
void WriteScanLogFile(const std::string& path, const ScanLog& log);

bool SameScanLog(const ScanLog& a, const ScanLog& b);

}  // namespace prf

#endif  // PRF_SCAN_LOG_H_
