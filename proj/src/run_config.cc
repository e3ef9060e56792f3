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

#include "prf/run_config.h"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace prf {
namespace {

struct Field {
  std::string name;
  std::string doc;
  std::function<std::string(const RunConfig&)> get;
  std::function<void(RunConfig*, std::string_view)> set;
};

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double ParseDouble(std::string_view s) {
  const std::string text(s);
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (text.empty() || used != text.size()) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  return v;
}

template <typename Int>
Int ParseInt(std::string_view s) {
  Int v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

Field Real(std::string name, std::string doc, std::function<double&(RunConfig&)> ref) {
  return {std::move(name), std::move(doc),
          [ref](const RunConfig& c) { return FormatDouble(ref(const_cast<RunConfig&>(c))); },
          [ref](RunConfig* c, std::string_view v) { ref(*c) = ParseDouble(v); }};
}

template <typename Int>
Field Integer(std::string name, std::string doc, std::function<Int&(RunConfig&)> ref) {
  return {std::move(name), std::move(doc),
          [ref](const RunConfig& c) { return std::to_string(ref(const_cast<RunConfig&>(c))); },
          [ref](RunConfig* c, std::string_view v) { ref(*c) = ParseInt<Int>(v); }};
}

std::vector<Field> MakeFields() {
  std::vector<Field> f;
  f.push_back(Real("p", "Arak scale parameter, 1/m", [](RunConfig& c) -> double& {
    return c.sampler.arak.p;
  }));
  f.push_back(Integer<std::uint64_t>("seed", "base random seed", [](RunConfig& c) -> std::uint64_t& {
    return c.sampler.seed;
  }));
  f.push_back(Integer<std::int64_t>("burn_in", "proposals discarded before sampling",
                                    [](RunConfig& c) -> std::int64_t& { return c.sampler.burn_in; }));
  f.push_back(Integer<std::int64_t>("steps", "sampling proposals per chain",
                                    [](RunConfig& c) -> std::int64_t& { return c.sampler.steps; }));
  f.push_back(Integer<std::int64_t>("thin", "proposals between retained samples",
                                    [](RunConfig& c) -> std::int64_t& { return c.sampler.thin; }));
  f.push_back(Integer<int>("chains", "independent chains merged by sample",
                           [](RunConfig& c) -> int& { return c.chains; }));
  f.push_back(Real("raster.cell", "raster cell size, m", [](RunConfig& c) -> double& {
    return c.sampler.raster_cell_size;
  }));
  f.push_back(Real("moves.delta", "local move radius, m", [](RunConfig& c) -> double& {
    return c.sampler.moves.delta;
  }));
  for (int k = 0; k < kNumMoveKinds; ++k) {
    const auto kind = static_cast<MoveKind>(k);
    f.push_back(Real("moves.weight." + std::string(MoveKindName(kind)), "proposal weight (weights sum to 1, birth and death pairs equal)",
                     [k](RunConfig& c) -> double& { return c.sampler.moves.weights.w[k]; }));
  }
  f.push_back(Real("anneal.t_start", "initial annealing temperature",
                   [](RunConfig& c) -> double& { return c.anneal.start; }));
  f.push_back(Real("anneal.t_end", "final annealing temperature",
                   [](RunConfig& c) -> double& { return c.anneal.end; }));
  f.push_back(Integer<std::int64_t>("anneal.steps", "annealing proposals",
                                    [](RunConfig& c) -> std::int64_t& { return c.anneal_steps; }));

  f.push_back(Real("laser.sigma_relative", "Gaussian sigma as a fraction of range",
                   [](RunConfig& c) -> double& { return c.sensors.laser.sigma_relative; }));
  f.push_back(Real("laser.sigma_floor", "minimum Gaussian sigma, m",
                   [](RunConfig& c) -> double& { return c.sensors.laser.sigma_floor; }));
  f.push_back(Real("laser.w_gauss", "hit weight",
                   [](RunConfig& c) -> double& { return c.sensors.laser.w_gauss; }));
  f.push_back(Real("laser.w_uniform", "uniform outlier weight",
                   [](RunConfig& c) -> double& { return c.sensors.laser.w_uniform; }));
  f.push_back(Real("laser.w_maxrange", "max-range weight",
                   [](RunConfig& c) -> double& { return c.sensors.laser.w_maxrange; }));

  f.push_back(Real("sonar.face_intercept", "face logistic intercept",
                   [](RunConfig& c) -> double& { return c.sensors.sonar.face_intercept; }));
  f.push_back(Real("sonar.face_depth", "face logistic depth coefficient, 1/m",
                   [](RunConfig& c) -> double& { return c.sensors.sonar.face_depth; }));
  f.push_back(Real("sonar.face_angle", "face logistic projection-angle coefficient, 1/rad",
                   [](RunConfig& c) -> double& { return c.sensors.sonar.face_angle; }));
  f.push_back(Real("sonar.face_subtended", "face logistic subtended-angle coefficient, 1/rad",
                   [](RunConfig& c) -> double& { return c.sensors.sonar.face_subtended; }));
  f.push_back(Real("sonar.corner_intercept", "corner logistic intercept",
                   [](RunConfig& c) -> double& { return c.sensors.sonar.corner_intercept; }));
  f.push_back(Real("sonar.corner_depth", "corner logistic depth coefficient, 1/m",
                   [](RunConfig& c) -> double& { return c.sensors.sonar.corner_depth; }));
  f.push_back(Real("sonar.sigma", "return Gaussian sigma, m",
                   [](RunConfig& c) -> double& { return c.sensors.sonar.sigma; }));
  f.push_back(Real("sonar.w_uniform", "outlier uniform weight",
                   [](RunConfig& c) -> double& { return c.sensors.sonar.w_uniform; }));
  f.push_back(Real("sonar.w_exponential", "outlier exponential weight",
                   [](RunConfig& c) -> double& { return c.sensors.sonar.w_exponential; }));
  f.push_back(Real("sonar.w_maxrange", "outlier max-range weight",
                   [](RunConfig& c) -> double& { return c.sensors.sonar.w_maxrange; }));
  f.push_back(Real("sonar.beta", "outlier exponential rate, 1/m",
                   [](RunConfig& c) -> double& { return c.sensors.sonar.beta; }));

  f.push_back(Real("baseline.laser_occupied", "log-odds added at a laser impact",
                   [](RunConfig& c) -> double& { return c.baseline.laser_occupied; }));
  f.push_back(Real("baseline.laser_free", "log-odds removed along a laser beam",
                   [](RunConfig& c) -> double& { return c.baseline.laser_free; }));
  f.push_back(Real("baseline.sonar_occupied", "log-odds added on a sonar arc",
                   [](RunConfig& c) -> double& { return c.baseline.sonar_occupied; }));
  f.push_back(Real("baseline.sonar_free", "log-odds removed inside a sonar cone",
                   [](RunConfig& c) -> double& { return c.baseline.sonar_free; }));
  f.push_back(Real("baseline.sonar_arc", "sonar arc half-width, m",
                   [](RunConfig& c) -> double& { return c.baseline.sonar_arc_half_width; }));
  return f;
}

const std::vector<Field>& Fields() {
  static const std::vector<Field> fields = MakeFields();
  return fields;
}

const Field& Find(std::string_view key) {
  for (const Field& f : Fields()) {
    if (f.name == key) return f;
  }
  throw std::invalid_argument("unknown config key '" + std::string(key) + "'");
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

RunConfig::RunConfig() {
  sampler.arak.p = 0.1;
  sampler.burn_in = 200000;
  sampler.steps = 2000000;
  sampler.thin = 100;
}

std::vector<ConfigKey> ConfigKeys() {
  std::vector<ConfigKey> keys;
  for (const Field& f : Fields()) keys.push_back({f.name, f.doc});
  return keys;
}

void SetConfigValue(RunConfig* cfg, std::string_view key, std::string_view value) {
  const Field& f = Find(key);
  try {
    f.set(cfg, Trim(value));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string(key) + ": " + e.what());
  }
}

std::string GetConfigValue(const RunConfig& cfg, std::string_view key) {
  return Find(key).get(cfg);
}

void ApplyAssignment(RunConfig* cfg, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw std::invalid_argument("expected key=value, got '" + std::string(assignment) + "'");
  }
  SetConfigValue(cfg, Trim(assignment.substr(0, eq)), assignment.substr(eq + 1));
}

void ParseRunConfigInto(std::istream& in, const std::string& source, RunConfig* cfg) {
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view body = line;
    const auto hash = body.find('#');
    if (hash != std::string_view::npos) body = body.substr(0, hash);
    body = Trim(body);
    if (body.empty()) continue;
    try {
      ApplyAssignment(cfg, body);
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(source + ":" + std::to_string(number) + ": " + e.what());
    }
  }
}

RunConfig ParseRunConfig(std::istream& in, const std::string& source) {
  RunConfig cfg;
  ParseRunConfigInto(in, source, &cfg);
  return cfg;
}

void WriteRunConfig(std::ostream& out, const RunConfig& cfg) {
  for (const Field& f : Fields()) {
    out << "# " << f.doc << "\n" << f.name << "=" << f.get(cfg) << "\n";
  }
}

RunConfig ReadRunConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  return ParseRunConfig(in, path);
}

bool SameRunConfig(const RunConfig& a, const RunConfig& b) {
  for (const Field& f : Fields()) {
    if (f.get(a) != f.get(b)) return false;
  }
  return true;
}

}  // namespace prf
