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

#ifndef PRF_CHAIN_H_
#define PRF_CHAIN_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "prf/arak_prior.h"
#include "prf/coloring.h"
#include "prf/likelihood.h"
#include "prf/moves.h"

namespace prf {

inline constexpr double kDefaultRasterCellSize = 0.05;

// Geometric interpolation from start to end over a run; constant if equal.
struct TemperatureSchedule {
  double start = 1.0;
  double end = 1.0;

  double At(std::int64_t step, std::int64_t total) const;
};

struct SamplerConfig {
  ArakParams arak;
  MoveParams moves;
  TemperatureSchedule temperature;
  std::int64_t burn_in = 0;
  // Proposals after burn-in.
  std::int64_t steps = 0;
  // A sample is retained every `thin` proposals after burn-in.
  std::int64_t thin = 100;
  std::uint64_t seed = 1;
  double raster_cell_size = kDefaultRasterCellSize;
};

// Throws std::invalid_argument for unusable settings.
void CheckSamplerConfig(const SamplerConfig& cfg);

// Point-color and cell-all-white tallies over retained samples, on the cell
// centers and cells of one raster grid.
class PosteriorAccumulator {
 public:
  PosteriorAccumulator() = default;
  explicit PosteriorAccumulator(const GridSpec& grid);

  const GridSpec& grid() const { return grid_; }
  std::int64_t samples() const { return samples_; }
  std::span<const std::int64_t> black_counts() const { return black_; }
  std::span<const std::int64_t> white_cell_counts() const { return white_cell_; }

  // One retained sample given full per-cell flags.
  void AddSample(std::span<const std::uint8_t> point_black,
                 std::span<const std::uint8_t> cell_white);
  // Element-wise sum; grids must match.
  void Merge(const PosteriorAccumulator& other);

  std::vector<double> PointBlackProbability() const;
  std::vector<double> CellWhiteProbability() const;

  friend bool operator==(const PosteriorAccumulator&, const PosteriorAccumulator&) = default;

 private:
  friend class RasterTracker;
  GridSpec grid_;
  std::vector<std::int64_t> black_;
  std::vector<std::int64_t> white_cell_;
  std::int64_t samples_ = 0;
};

// Full raster of a coloring: color of every cell center and whether each cell
// is crossed by no edge and white.
struct Raster {
  std::vector<std::uint8_t> point_black;
  std::vector<std::uint8_t> cell_white;
};
Raster RenderSerial(const Coloring& c, const GridSpec& grid);
Raster RenderParallel(const Coloring& c, const GridSpec& grid);

// Raster flags of the current chain state, updated from each accepted edit,
// and lazily folded into an accumulator: a cell's count only changes when its
// flag does.
class RasterTracker {
 public:
  RasterTracker(const Coloring& c, const GridSpec& grid);

  void OnAccepted(const Edit& edit, const ChangeRecord& record);
  // Counts the current state as one retained sample.
  void Tick();
  // Folds pending runs into the accumulator; call before reading it.
  void FlushInto(PosteriorAccumulator* acc);

  const Raster& raster() const { return raster_; }

 private:
  void SetPoint(int cell, bool black);
  void SetCell(int cell, bool white);

  GridSpec grid_;
  Raster raster_;
  std::vector<int> touch_;
  std::vector<std::int64_t> point_since_;
  std::vector<std::int64_t> cell_since_;
  std::vector<std::int64_t> black_pending_;
  std::vector<std::int64_t> white_pending_;
  std::int64_t ticks_ = 0;
  std::int64_t flushed_ticks_ = 0;
};

struct KindStats {
  std::int64_t proposed = 0;
  std::int64_t valid = 0;
  std::int64_t accepted = 0;
};

struct TracePoint {
  std::int64_t step = 0;
  double temperature = 1.0;
  double log_prior = 0.0;
  double log_likelihood = 0.0;
  int edges = 0;
};

struct ChainReport {
  std::array<KindStats, kNumMoveKinds> kinds{};
  std::vector<TracePoint> trace;
  std::int64_t proposals = 0;
  std::int64_t retained = 0;
  double seconds = 0.0;
  double mean_edges = 0.0;
  // Log likelihood minus the prior potential: highest visited and final.
  // Annealing maximizes this.
  double best_objective = 0.0;
  double final_objective = 0.0;
  // Unnormalized log posterior density of the final state.
  double final_log_posterior = 0.0;

  double ProposalsPerSecond() const { return seconds > 0.0 ? proposals / seconds : 0.0; }
};

void WriteChainReport(std::ostream& os, const ChainReport& report);

// Observer of retained samples, for statistics beyond the accumulator.
struct SampleObserver {
  virtual ~SampleObserver() = default;
  virtual void OnSample(const Coloring& c) = 0;
};

struct ChainResult {
  Coloring final_state;
  // Highest-posterior state visited; set when tracking is requested.
  std::optional<Coloring> best_state;
  ChainReport report;
};

struct ChainOptions {
  // Null runs the prior alone.
  const ObservationSet* data = nullptr;
  SensorModel model;
  PosteriorAccumulator* accumulator = nullptr;
  SampleObserver* observer = nullptr;
  bool track_best = false;
  // Seed stream for this chain.
  std::uint64_t stream = 0;
  std::optional<Coloring> initial;
};

// Metropolis-Hastings from the all-white coloring (or the given initial
// state): burn-in, then steps proposals retaining every thin-th state.
ChainResult RunChain(const SamplerConfig& cfg, const ChainOptions& options);

// Annealed run keeping the best state; cfg.temperature should decrease.
ChainResult Anneal(const SamplerConfig& cfg, const ChainOptions& options);

// Independent chains on streams 0..n-1 with accumulators merged in chain
// order. The parallel version returns bit-identical results.
struct MultiChainResult {
  std::vector<ChainResult> chains;
  PosteriorAccumulator accumulator;
};
MultiChainResult RunChainsSerial(const SamplerConfig& cfg, const ChainOptions& options, int n);
MultiChainResult RunChainsParallel(const SamplerConfig& cfg, const ChainOptions& options, int n);

}  // namespace prf

#endif  // PRF_CHAIN_H_
