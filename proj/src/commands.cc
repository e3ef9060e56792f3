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

#include "prf/commands.h"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "prf/chain.h"
#include "prf/map_io.h"
#include "prf/occupancy_grid.h"
#include "prf/raster_io.h"
#include "prf/rng.h"

namespace prf {
namespace {

Rect RequireWindow(const ScanLog& log, const std::string& path) {
  if (!log.window) throw std::runtime_error(path + ": missing '# window' header");
  return *log.window;
}

void ReportAccuracy(const std::optional<std::string>& truth_path, const char* label,
                    std::span<const double> p_black, const GridSpec& grid, std::ostream& out) {
  if (!truth_path) return;
  const Coloring truth = ReadMapFile(*truth_path);
  if (truth.window() != grid.window()) {
    throw std::runtime_error(*truth_path + ": truth window differs from the log window");
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%s_accuracy %.4f\n", label,
                ClassificationAccuracy(p_black, grid, truth));
  out << buf;
}

std::vector<double> Complement(const std::vector<double>& v) {
  std::vector<double> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = 1.0 - v[i];
  return out;
}

}  // namespace

ScanLog SimulateLog(const Coloring& world, const TrajectorySpec& traj, const SensorModel& model,
                    std::uint64_t seed) {
  ScanLog log;
  log.window = world.window();
  log.laser_max_range = traj.laser_max_range;
  log.sonar_max_range = traj.sonar_max_range;
  Rng rng(seed);
  const auto poses = SamplePoses(traj.waypoints, traj.spacing);
  for (size_t i = 0; i < poses.size(); ++i) {
    if (traj.laser) {
      for (const LaserObs& o : SimulateLaser(world, poses[i], traj.laser_beams, traj.laser_fov,
                                             traj.laser_max_range, model.laser, rng)) {
        log.data.lasers.push_back(o);
        log.laser_time.push_back(static_cast<double>(i));
      }
    }
    if (traj.sonar) {
      for (int k = 0; k < traj.sonar_count; ++k) {
        const double bearing = 2.0 * std::numbers::pi * k / traj.sonar_count;
        log.data.sonars.push_back(SimulateSonar(world, poses[i], bearing, traj.sonar_half_angle,
                                                traj.sonar_max_range, model.sonar, rng));
        log.sonar_time.push_back(static_cast<double>(i));
      }
    }
  }
  return log;
}

int CmdSimulate(const SimulateOptions& o, std::ostream& out) {
  const Coloring world = MakeWorld(o.world);
  TrajectorySpec traj = o.trajectory;
  if (traj.waypoints.empty()) traj.waypoints = DefaultRoute(o.world);
  const ScanLog log = SimulateLog(world, traj, o.config.sensors, StreamSeed(o.world.seed, 7));
  WriteScanLogFile(o.out_prefix + ".log", log);
  WriteMapFile(o.out_prefix + "_truth.json", world);
  out << "layout " << LayoutName(o.world.layout) << "\n";
  out << "lasers " << log.data.lasers.size() << "\n";
  out << "sonars " << log.data.sonars.size() << "\n";
  out << "wrote " << o.out_prefix << ".log " << o.out_prefix << "_truth.json\n";
  return 0;
}

int CmdSample(const SampleOptions& o, std::ostream& out) {
  const ScanLog log = ReadScanLogFile(o.log_path);
  SamplerConfig cfg = o.config.sampler;
  cfg.arak.window = RequireWindow(log, o.log_path);
  cfg.temperature = TemperatureSchedule{1.0, 1.0};
  ChainOptions opts;
  opts.data = &log.data;
  opts.model = o.config.sensors;
  const MultiChainResult res = RunChainsParallel(cfg, opts, o.config.chains);
  const GridSpec& grid = res.accumulator.grid();
  const std::vector<double> black = res.accumulator.PointBlackProbability();
  const std::vector<double> white = res.accumulator.CellWhiteProbability();

  RasterSidecar side;
  side.grid = grid;
  side.samples = res.accumulator.samples();
  side.chains = o.config.chains;
  side.extra["seed"] = std::to_string(cfg.seed);
  side.image = o.out_prefix + "_black.pgm";
  side.kind = "point_black";
  WriteRaster(side.image, FromBlackProbability(grid, black), side);
  side.image = o.out_prefix + "_white.pgm";
  side.kind = "cell_all_white";
  WriteRaster(side.image, ToImage(grid, white), side);

  std::ofstream report(o.out_prefix + "_report.txt");
  if (!report) throw std::runtime_error("cannot write " + o.out_prefix + "_report.txt");
  for (size_t k = 0; k < res.chains.size(); ++k) {
    report << "# chain " << k << "\n";
    WriteChainReport(report, res.chains[k].report);
  }
  double proposals = 0.0, seconds = 0.0;
  for (const ChainResult& c : res.chains) {
    proposals += c.report.proposals;
    seconds += c.report.seconds;
  }
  out << "samples " << res.accumulator.samples() << "\n";
  out << "proposals_per_second " << (seconds > 0.0 ? proposals / seconds : 0.0) << "\n";
  ReportAccuracy(o.truth_path, "posterior", black, grid, out);
  out << "wrote " << o.out_prefix << "_black.pgm " << o.out_prefix << "_white.pgm "
      << o.out_prefix << "_report.txt\n";
  return 0;
}

int CmdMap(const MapOptions& o, std::ostream& out) {
  const ScanLog log = ReadScanLogFile(o.log_path);
  SamplerConfig cfg = o.config.sampler;
  cfg.arak.window = RequireWindow(log, o.log_path);
  cfg.temperature = o.config.anneal;
  cfg.burn_in = 0;
  cfg.steps = o.config.anneal_steps;
  ChainOptions opts;
  opts.data = &log.data;
  opts.model = o.config.sensors;
  const ChainResult res = Anneal(cfg, opts);
  const Coloring& best = res.best_state ? *res.best_state : res.final_state;
  if (!best.Validate().empty()) throw std::runtime_error("annealed map failed validation");
  WriteMapFile(o.out_prefix + ".json", best);

  const GridSpec grid(cfg.arak.window, cfg.raster_cell_size);
  const Raster r = RenderParallel(best, grid);
  std::vector<double> black(r.point_black.begin(), r.point_black.end());
  RasterSidecar side;
  side.grid = grid;
  side.samples = 1;
  side.chains = 1;
  side.image = o.out_prefix + ".pgm";
  side.kind = "map";
  side.extra["seed"] = std::to_string(cfg.seed);
  WriteRaster(side.image, FromBlackProbability(grid, black), side);

  std::ofstream report(o.out_prefix + "_report.txt");
  if (!report) throw std::runtime_error("cannot write " + o.out_prefix + "_report.txt");
  WriteChainReport(report, res.report);
  out << "edges " << best.num_edges() << "\n";
  out << "best_objective " << res.report.best_objective << "\n";
  ReportAccuracy(o.truth_path, "map", black, grid, out);
  out << "wrote " << o.out_prefix << ".json " << o.out_prefix << ".pgm\n";
  return 0;
}

int CmdBaseline(const BaselineOptions& o, std::ostream& out) {
  const ScanLog log = ReadScanLogFile(o.log_path);
  const GridSpec grid(RequireWindow(log, o.log_path), o.config.sampler.raster_cell_size);
  OccupancyGrid occ(grid, o.config.baseline);
  occ.Update(log.data);
  const std::vector<double> p = occ.Probabilities();
  RasterSidecar side;
  side.grid = grid;
  side.image = o.out_prefix + ".pgm";
  side.kind = "occupancy";
  WriteRaster(side.image, ToImage(grid, Complement(p)), side);
  ReportAccuracy(o.truth_path, "baseline", p, grid, out);
  out << "wrote " << side.image << "\n";
  return 0;
}

int CmdPriorStats(const std::vector<PriorStatsOptions>& runs, std::ostream& out) {
  bool ok = true;
  for (const PriorStatsOptions& r : runs) {
    const PriorStatsResult res = RunPriorStats(r);
    WritePriorStats(out, res);
    ok = ok && res.edges_pass && res.pairs_pass();
  }
  return ok ? 0 : 1;
}

}  // namespace prf
