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

#include "prf/scan_log.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace prf {
namespace {

std::string Format(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

class LineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double ReadDouble(std::istringstream& in, const char* what) {
  std::string token;
  if (!(in >> token)) throw LineError(std::string("missing ") + what);
  size_t used = 0;
  double v;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    throw LineError(std::string("bad ") + what + " '" + token + "'");
  }
  if (used != token.size()) throw LineError(std::string("bad ") + what + " '" + token + "'");
  return v;
}

bool ReadFlag(std::istringstream& in) {
  std::string token;
  if (!(in >> token)) throw LineError("missing maxflag");
  if (token == "0") return false;
  if (token == "1") return true;
  throw LineError("maxflag must be 0 or 1, got '" + token + "'");
}

void ExpectEnd(std::istringstream& in) {
  std::string extra;
  if (in >> extra) throw LineError("unexpected trailing field '" + extra + "'");
}

void CheckPose(const ScanLog& log, Point2 p) {
  if (log.window && !log.window->Contains(p)) throw LineError("pose outside window");
}

void CheckRange(double range, double max_range) {
  if (!(range > 0.0)) throw LineError("range must be positive");
  if (range > max_range) throw LineError("range exceeds max range");
}

}  // namespace

ScanLog ParseScanLog(std::istream& in, const std::string& source) {
  ScanLog log;
  std::string line;
  int number = 0;
  bool records = false;
  while (std::getline(in, line)) {
    ++number;
    try {
      std::istringstream fields(line);
      std::string tag;
      if (!(fields >> tag)) continue;
      if (tag[0] == '#') {
        std::string key = tag.size() > 1 ? tag.substr(1) : "";
        if (key.empty()) fields >> key;
        if (key == "window") {
          if (records) throw LineError("header after records");
          Rect w;
          w.min.x = ReadDouble(fields, "xmin");
          w.min.y = ReadDouble(fields, "ymin");
          w.max.x = ReadDouble(fields, "xmax");
          w.max.y = ReadDouble(fields, "ymax");
          ExpectEnd(fields);
          if (!(w.Width() > 0.0 && w.Height() > 0.0)) throw LineError("empty window");
          log.window = w;
        } else if (key == "laser_max_range" || key == "sonar_max_range") {
          if (records) throw LineError("header after records");
          const double v = ReadDouble(fields, "max range");
          ExpectEnd(fields);
          if (!(v > 0.0)) throw LineError("max range must be positive");
          (key == "laser_max_range" ? log.laser_max_range : log.sonar_max_range) = v;
        }
        continue;
      }
      records = true;
      if (tag == "LASER") {
        LaserObs o;
        const double t = ReadDouble(fields, "t");
        o.pose.p.x = ReadDouble(fields, "x");
        o.pose.p.y = ReadDouble(fields, "y");
        o.pose.heading = ReadDouble(fields, "theta");
        o.bearing = ReadDouble(fields, "bearing");
        o.range = ReadDouble(fields, "range");
        o.max_flag = ReadFlag(fields);
        ExpectEnd(fields);
        o.max_range = log.laser_max_range;
        CheckPose(log, o.pose.p);
        CheckRange(o.range, o.max_range);
        log.data.lasers.push_back(o);
        log.laser_time.push_back(t);
      } else if (tag == "SONAR") {
        SonarObs o;
        const double t = ReadDouble(fields, "t");
        o.pose.p.x = ReadDouble(fields, "x");
        o.pose.p.y = ReadDouble(fields, "y");
        o.pose.heading = ReadDouble(fields, "theta");
        o.bearing = ReadDouble(fields, "bearing");
        o.half_angle = ReadDouble(fields, "half_angle");
        o.range = ReadDouble(fields, "range");
        o.max_flag = ReadFlag(fields);
        ExpectEnd(fields);
        o.max_range = log.sonar_max_range;
        if (!(o.half_angle > 0.0 && o.half_angle < 1.5)) throw LineError("half_angle out of range");
        CheckPose(log, o.pose.p);
        CheckRange(o.range, o.max_range);
        log.data.sonars.push_back(o);
        log.sonar_time.push_back(t);
      } else if (tag == "POINT") {
        PointColorObs o;
        o.q.x = ReadDouble(fields, "x");
        o.q.y = ReadDouble(fields, "y");
        o.value = ReadDouble(fields, "value");
        o.mu_black = ReadDouble(fields, "mu_black");
        o.mu_white = ReadDouble(fields, "mu_white");
        o.sigma = ReadDouble(fields, "sigma");
        ExpectEnd(fields);
        if (!(o.sigma > 0.0)) throw LineError("sigma must be positive");
        CheckPose(log, o.q);
        log.data.points.push_back(o);
      } else {
        throw LineError("unknown record '" + tag + "'");
      }
    } catch (const LineError& e) {
      throw std::runtime_error(source + ":" + std::to_string(number) + ": " + e.what());
    }
  }
  return log;
}

void WriteScanLog(std::ostream& out, const ScanLog& log) {
  out << "# prfmap scan log\n";
  if (log.window) {
    out << "# window " << Format(log.window->min.x) << " " << Format(log.window->min.y) << " "
        << Format(log.window->max.x) << " " << Format(log.window->max.y) << "\n";
  }
  out << "# laser_max_range " << Format(log.laser_max_range) << "\n";
  out << "# sonar_max_range " << Format(log.sonar_max_range) << "\n";
  for (size_t i = 0; i < log.data.lasers.size(); ++i) {
    const LaserObs& o = log.data.lasers[i];
    out << "LASER " << Format(i < log.laser_time.size() ? log.laser_time[i] : 0.0) << " "
        << Format(o.pose.p.x) << " " << Format(o.pose.p.y) << " " << Format(o.pose.heading)
        << " " << Format(o.bearing) << " " << Format(o.range) << " " << (o.max_flag ? 1 : 0)
        << "\n";
  }
  for (size_t i = 0; i < log.data.sonars.size(); ++i) {
    const SonarObs& o = log.data.sonars[i];
    out << "SONAR " << Format(i < log.sonar_time.size() ? log.sonar_time[i] : 0.0) << " "
        << Format(o.pose.p.x) << " " << Format(o.pose.p.y) << " " << Format(o.pose.heading)
        << " " << Format(o.bearing) << " " << Format(o.half_angle) << " " << Format(o.range)
        << " " << (o.max_flag ? 1 : 0) << "\n";
  }
  for (const PointColorObs& o : log.data.points) {
    out << "POINT " << Format(o.q.x) << " " << Format(o.q.y) << " " << Format(o.value) << " "
        << Format(o.mu_black) << " " << Format(o.mu_white) << " " << Format(o.sigma) << "\n";
  }
}

ScanLog ReadScanLogFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scan log " + path);
  return ParseScanLog(in, path);
}

void WriteScanLogFile(const std::string& path, const ScanLog& log) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write scan log " + path);
  WriteScanLog(out, log);
  if (!out) throw std::runtime_error("error writing scan log " + path);
}

bool SameScanLog(const ScanLog& a, const ScanLog& b) {
  if (a.window != b.window || a.laser_max_range != b.laser_max_range ||
      a.sonar_max_range != b.sonar_max_range || a.laser_time != b.laser_time ||
      a.sonar_time != b.sonar_time || a.data.lasers.size() != b.data.lasers.size() ||
      a.data.sonars.size() != b.data.sonars.size() ||
      a.data.points.size() != b.data.points.size()) {
    return false;
  }
  for (size_t i = 0; i < a.data.lasers.size(); ++i) {
    const LaserObs &x = a.data.lasers[i], &y = b.data.lasers[i];
    if (x.pose.p != y.pose.p || x.pose.heading != y.pose.heading || x.bearing != y.bearing ||
        x.range != y.range || x.max_range != y.max_range || x.max_flag != y.max_flag) {
      return false;
    }
  }
  for (size_t i = 0; i < a.data.sonars.size(); ++i) {
    const SonarObs &x = a.data.sonars[i], &y = b.data.sonars[i];
    if (x.pose.p != y.pose.p || x.pose.heading != y.pose.heading || x.bearing != y.bearing ||
        x.half_angle != y.half_angle || x.range != y.range || x.max_range != y.max_range ||
        x.max_flag != y.max_flag) {
      return false;
    }
  }
  for (size_t i = 0; i < a.data.points.size(); ++i) {
    const PointColorObs &x = a.data.points[i], &y = b.data.points[i];
    if (x.q != y.q || x.value != y.value || x.mu_black != y.mu_black ||
        x.mu_white != y.mu_white || x.sigma != y.sigma) {
      return false;
    }
  }
  return true;
}

}  // namespace prf
