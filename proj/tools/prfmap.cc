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

// prfmap: polygonal random field mapping from range scans.

#include <cstdlib>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prf/commands.h"

namespace {

// Config file (flag, else $PRFMAP_CONFIG), then --set assignments, then
// dedicated flags.
struct ConfigFlags {
  std::string path;
  std::vector<std::string> sets;
  std::optional<double> p;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> steps;
  std::optional<std::int64_t> burn_in;
  std::optional<int> chains;
  std::optional<double> cell;

  void Add(CLI::App* app) {
    app->add_option("--config", path, "key=value config file (default $PRFMAP_CONFIG)");
    app->add_option("--set", sets, "override one config key, key=value (repeatable)");
    app->add_option("--p", p, "Arak scale parameter");
    app->add_option("--seed", seed, "random seed");
    app->add_option("--steps", steps, "sampling proposals per chain");
    app->add_option("--burn-in", burn_in, "burn-in proposals");
    app->add_option("--chains", chains, "independent chains");
    app->add_option("--cell", cell, "raster cell size, m");
  }

  prf::RunConfig Load() const {
    prf::RunConfig cfg;
    std::string file = path;
    if (file.empty()) {
      if (const char* env = std::getenv(prf::kConfigEnvVar)) file = env;
    }
    if (!file.empty()) cfg = prf::ReadRunConfigFile(file);
    for (const std::string& s : sets) prf::ApplyAssignment(&cfg, s);
    if (p) cfg.sampler.arak.p = *p;
    if (seed) cfg.sampler.seed = *seed;
    if (steps) cfg.sampler.steps = *steps;
    if (burn_in) cfg.sampler.burn_in = *burn_in;
    if (chains) cfg.chains = *chains;
    if (cell) cfg.sampler.raster_cell_size = *cell;
    return cfg;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prfmap: occupancy mapping with polygonal random fields"};
  app.require_subcommand(1);

  // simulate
  auto* sim = app.add_subcommand("simulate", "simulate a scan log and ground-truth map");
  ConfigFlags sim_cfg;
  sim_cfg.Add(sim);
  std::string layout = "corridor", sim_out;
  prf::WorldSpec world;
  prf::TrajectorySpec traj;
  bool laser = false, sonar = false;
  double sonar_spread_deg = 20.0;
  sim->add_option("--layout", layout, "corridor | lobby | rooms-off-hallway")->capture_default_str();
  sim->add_option("--world-seed", world.seed, "world and noise seed")->capture_default_str();
  sim->add_option("--wall", world.wall_thickness, "wall thickness, m")->capture_default_str();
  sim->add_option("--door", world.door_width, "door width, m")->capture_default_str();
  sim->add_option("--spacing", traj.spacing, "distance between poses, m")->capture_default_str();
  sim->add_option("--beams", traj.laser_beams, "laser beams per pose")->capture_default_str();
  sim->add_option("--laser-range", traj.laser_max_range, "laser max range, m")->capture_default_str();
  sim->add_option("--sonars", traj.sonar_count, "sonars per pose")->capture_default_str();
  sim->add_option("--sonar-spread", sonar_spread_deg, "sonar cone spread, degrees")->capture_default_str();
  sim->add_option("--sonar-range", traj.sonar_max_range, "sonar max range, m")->capture_default_str();
  sim->add_flag("--laser", laser, "simulate laser (default when no sensor flag is given)");
  sim->add_flag("--sonar", sonar, "simulate sonar");
  sim->add_option("--out", sim_out, "output prefix")->required();

  // sample / map / baseline
  struct DataCommand {
    CLI::App* app;
    ConfigFlags cfg;
    std::string log, out, truth;
  };
  auto add_data = [&](const char* name, const char* doc) {
    auto* d = new DataCommand{app.add_subcommand(name, doc), {}, {}, {}, {}};
    d->cfg.Add(d->app);
    d->app->add_option("--log", d->log, "scan log")->required()->check(CLI::ExistingFile);
    d->app->add_option("--out", d->out, "output prefix")->required();
    d->app->add_option("--truth", d->truth, "ground-truth map; prints classification accuracy")
        ->check(CLI::ExistingFile);
    return std::unique_ptr<DataCommand>(d);
  };
  auto sample = add_data("sample", "posterior rasters from a scan log");
  auto map = add_data("map", "annealed polygonal map from a scan log");
  auto baseline = add_data("baseline", "occupancy-grid raster from a scan log");

  // prior-stats
  auto* stats = app.add_subcommand("prior-stats", "check prior chains against closed forms");
  std::vector<double> stats_p = {0.25, 0.5};
  prf::PriorStatsOptions stats_opts;
  stats->add_option("--p", stats_p, "scale parameters")->capture_default_str();
  stats->add_option("--burn-in", stats_opts.burn_in, "burn-in proposals")->capture_default_str();
  stats->add_option("--steps", stats_opts.steps, "sampling proposals per chain")->capture_default_str();
  stats->add_option("--thin", stats_opts.thin, "proposals between samples")->capture_default_str();
  stats->add_option("--chains", stats_opts.chains, "chains per p")->capture_default_str();
  stats->add_option("--seed", stats_opts.seed, "seed")->capture_default_str();

  // print-config
  auto* show = app.add_subcommand("print-config", "print the effective configuration");
  ConfigFlags show_cfg;
  show_cfg.Add(show);

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) {
      prf::SimulateOptions o;
      o.world = world;
      o.world.layout = prf::ParseLayout(layout);
      o.trajectory = traj;
      o.trajectory.laser = laser || !sonar;
      o.trajectory.sonar = sonar;
      o.trajectory.sonar_half_angle = sonar_spread_deg * std::numbers::pi / 360.0;
      o.config = sim_cfg.Load();
      o.out_prefix = sim_out;
      return prf::CmdSimulate(o, std::cout);
    }
    auto truth = [](const std::string& s) {
      return s.empty() ? std::nullopt : std::optional<std::string>(s);
    };
    if (sample->app->parsed()) {
      return prf::CmdSample({sample->log, sample->cfg.Load(), sample->out, truth(sample->truth)},
                            std::cout);
    }
    if (map->app->parsed()) {
      return prf::CmdMap({map->log, map->cfg.Load(), map->out, truth(map->truth)}, std::cout);
    }
    if (baseline->app->parsed()) {
      return prf::CmdBaseline(
          {baseline->log, baseline->cfg.Load(), baseline->out, truth(baseline->truth)}, std::cout);
    }
    if (stats->parsed()) {
      std::vector<prf::PriorStatsOptions> runs;
      for (double p : stats_p) {
        prf::PriorStatsOptions r = stats_opts;
        r.p = p;
        runs.push_back(r);
      }
      return prf::CmdPriorStats(runs, std::cout);
    }
    if (show->parsed()) {
      prf::WriteRunConfig(std::cout, show_cfg.Load());
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "prfmap: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
