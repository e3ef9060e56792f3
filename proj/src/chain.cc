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

#include "prf/chain.h"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace prf {

double TemperatureSchedule::At(std::int64_t step, std::int64_t total) const {
  if (start == end || total <= 1) return start;
  const double f = static_cast<double>(step) / static_cast<double>(total - 1);
  return start * std::pow(end / start, f);
}

void CheckSamplerConfig(const SamplerConfig& cfg) {
  CheckMoveParams(cfg.moves);
  if (!(cfg.arak.p > 0.0)) throw std::invalid_argument("scale parameter p must be positive");
  if (!(cfg.arak.window.Area() > 0.0)) throw std::invalid_argument("window must have positive area");
  if (cfg.burn_in < 0 || cfg.steps < 0) throw std::invalid_argument("step counts must be non-negative");
  if (cfg.thin < 1) throw std::invalid_argument("thinning interval must be at least 1");
  if (!(cfg.temperature.start > 0.0) || !(cfg.temperature.end > 0.0)) {
    throw std::invalid_argument("temperatures must be positive");
  }
  if (!(cfg.raster_cell_size > 0.0)) throw std::invalid_argument("raster cell size must be positive");
}

// ---- accumulator ----

PosteriorAccumulator::PosteriorAccumulator(const GridSpec& grid)
    : grid_(grid), black_(grid.num_cells(), 0), white_cell_(grid.num_cells(), 0) {}

void PosteriorAccumulator::AddSample(std::span<const std::uint8_t> point_black,
                                     std::span<const std::uint8_t> cell_white) {
  for (size_t i = 0; i < black_.size(); ++i) {
    black_[i] += point_black[i];
    white_cell_[i] += cell_white[i];
  }
  ++samples_;
}

void PosteriorAccumulator::Merge(const PosteriorAccumulator& other) {
  if (!(grid_ == other.grid_)) throw std::invalid_argument("accumulator grids differ");
  for (size_t i = 0; i < black_.size(); ++i) {
    black_[i] += other.black_[i];
    white_cell_[i] += other.white_cell_[i];
  }
  samples_ += other.samples_;
}

std::vector<double> PosteriorAccumulator::PointBlackProbability() const {
  std::vector<double> out(black_.size(), 0.5);
  if (samples_ == 0) return out;
  for (size_t i = 0; i < out.size(); ++i) out[i] = static_cast<double>(black_[i]) / samples_;
  return out;
}

std::vector<double> PosteriorAccumulator::CellWhiteProbability() const {
  std::vector<double> out(white_cell_.size(), 0.5);
  if (samples_ == 0) return out;
  for (size_t i = 0; i < out.size(); ++i) out[i] = static_cast<double>(white_cell_[i]) / samples_;
  return out;
}

// ---- rendering ----

namespace {

std::vector<int> TouchCounts(const Coloring& c, const GridSpec& grid) {
  std::vector<int> touch(grid.num_cells(), 0);
  for (int e : c.edge_ids()) {
    for (CellIndex cell : GridTraceSegment(c.EdgeSegment(e), grid)) ++touch[grid.Flat(cell)];
  }
  return touch;
}

}  // namespace

Raster RenderSerial(const Coloring& c, const GridSpec& grid) {
  const int n = grid.num_cells();
  Raster r{std::vector<std::uint8_t>(n), std::vector<std::uint8_t>(n)};
  const std::vector<int> touch = TouchCounts(c, grid);
  for (int i = 0; i < n; ++i) {
    r.point_black[i] = c.ColorAt(grid.CellCenter(grid.Unflat(i))) == Color::kBlack;
    r.cell_white[i] = touch[i] == 0 && !r.point_black[i];
  }
  return r;
}

Raster RenderParallel(const Coloring& c, const GridSpec& grid) {
  const int n = grid.num_cells();
  Raster r{std::vector<std::uint8_t>(n), std::vector<std::uint8_t>(n)};
  const std::vector<int> touch = TouchCounts(c, grid);
  #pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    r.point_black[i] = c.ColorAt(grid.CellCenter(grid.Unflat(i))) == Color::kBlack;
    r.cell_white[i] = touch[i] == 0 && !r.point_black[i];
  }
  return r;
}

// ---- tracker ----

RasterTracker::RasterTracker(const Coloring& c, const GridSpec& grid)
    : grid_(grid),
      raster_(RenderParallel(c, grid)),
      touch_(TouchCounts(c, grid)),
      point_since_(grid.num_cells(), 0),
      cell_since_(grid.num_cells(), 0),
      black_pending_(grid.num_cells(), 0),
      white_pending_(grid.num_cells(), 0) {}

void RasterTracker::SetPoint(int cell, bool black) {
  if (raster_.point_black[cell] == black) return;
  if (raster_.point_black[cell]) black_pending_[cell] += ticks_ - point_since_[cell];
  point_since_[cell] = ticks_;
  raster_.point_black[cell] = black;
}

void RasterTracker::SetCell(int cell, bool white) {
  if (raster_.cell_white[cell] == white) return;
  if (raster_.cell_white[cell]) white_pending_[cell] += ticks_ - cell_since_[cell];
  cell_since_[cell] = ticks_;
  raster_.cell_white[cell] = white;
}

void RasterTracker::OnAccepted(const Edit& edit, const ChangeRecord& record) {
  std::vector<int> dirty = CellsOverlappingPolygon(edit.region, grid_);
  for (int cell : dirty) {
    if (PolygonContains(edit.region, grid_.CellCenter(grid_.Unflat(cell)))) {
      SetPoint(cell, !raster_.point_black[cell]);
    }
  }
  for (const Segment& s : record.removed_segments) {
    for (CellIndex c : GridTraceSegment(s, grid_)) {
      --touch_[grid_.Flat(c)];
      dirty.push_back(grid_.Flat(c));
    }
  }
  for (const Segment& s : record.added_segments) {
    for (CellIndex c : GridTraceSegment(s, grid_)) {
      ++touch_[grid_.Flat(c)];
      dirty.push_back(grid_.Flat(c));
    }
  }
  for (int cell : dirty) SetCell(cell, touch_[cell] == 0 && !raster_.point_black[cell]);
}

void RasterTracker::Tick() { ++ticks_; }

void RasterTracker::FlushInto(PosteriorAccumulator* acc) {
  for (int i = 0; i < grid_.num_cells(); ++i) {
    if (raster_.point_black[i]) black_pending_[i] += ticks_ - point_since_[i];
    if (raster_.cell_white[i]) white_pending_[i] += ticks_ - cell_since_[i];
    point_since_[i] = cell_since_[i] = ticks_;
    acc->black_[i] += black_pending_[i];
    acc->white_cell_[i] += white_pending_[i];
    black_pending_[i] = white_pending_[i] = 0;
  }
  acc->samples_ += ticks_ - flushed_ticks_;
  flushed_ticks_ = ticks_;
}

// ---- chains ----

void WriteChainReport(std::ostream& os, const ChainReport& report) {
  os << "# chain report\n";
  os << "proposals " << report.proposals << "\n";
  os << "retained " << report.retained << "\n";
  os << "seconds " << std::setprecision(6) << report.seconds << "\n";
  os << "proposals_per_second " << report.ProposalsPerSecond() << "\n";
  os << "mean_edges " << report.mean_edges << "\n";
  os << std::setprecision(17);
  os << "final_log_posterior " << report.final_log_posterior << "\n";
  os << "final_objective " << report.final_objective << "\n";
  os << "best_objective " << report.best_objective << "\n";
  os << "# kind proposed valid accepted\n";
  for (int k = 0; k < kNumMoveKinds; ++k) {
    const KindStats& s = report.kinds[k];
    os << "kind " << MoveKindName(static_cast<MoveKind>(k)) << " " << s.proposed << " "
       << s.valid << " " << s.accepted << "\n";
  }
  os << "# step temperature log_prior log_likelihood edges\n";
  for (const TracePoint& t : report.trace) {
    os << "trace " << t.step << " " << t.temperature << " " << t.log_prior << " "
       << t.log_likelihood << " " << t.edges << "\n";
  }
}

namespace {

ChainResult Run(const SamplerConfig& cfg, const ChainOptions& options) {
  CheckSamplerConfig(cfg);
  const auto t0 = std::chrono::steady_clock::now();
  ChainResult out{options.initial ? *options.initial
                                  : Coloring(cfg.arak.window, kDefaultIndexCellSize, Color::kWhite),
                  std::nullopt,
                  {}};
  Coloring& c = out.final_state;
  ChainReport& report = out.report;
  Rng rng(StreamSeed(cfg.seed, options.stream));
  const double p = cfg.arak.p;

  std::optional<LikelihoodState> lik;
  if (options.data) {
    lik.emplace(*options.data, options.model, cfg.arak.window);
    lik->Reset(c);
  }
  std::optional<RasterTracker> tracker;
  if (options.accumulator) tracker.emplace(c, options.accumulator->grid());

  double log_prior = UnnormalizedLogDensity(c.stats(), p);
  double log_lik = lik ? lik->total() : 0.0;
  auto objective = [&] { return log_lik - Potential(c.stats(), p); };
  double best = objective();
  bool best_unsaved = true;
  double edge_sum = 0.0;

  const std::int64_t total = cfg.burn_in + cfg.steps;
  for (std::int64_t i = 0; i < total; ++i) {
    const double temperature = cfg.temperature.At(i, total);
    MoveKind kind;
    std::optional<AppliedProposal> ap = ProposeAndApply(c, cfg.moves, rng, &kind);
    KindStats& ks = report.kinds[static_cast<int>(kind)];
    ++ks.proposed;
    if (ap) {
      ++ks.valid;
      const StatsDelta& d = ap->record.delta;
      const double lik_delta = lik ? lik->ProposeDelta(c, ap->proposal.edit) : 0.0;
      const double ratio = AcceptanceLogRatio(MeasureLogDensityDelta(d, p), PotentialDelta(d, p),
                                              lik_delta, ap->proposal, temperature);
      const bool accept = ratio >= 0.0 || std::log(Uniform01(rng)) < ratio;
      if (accept) {
        ++ks.accepted;
        if (options.track_best && best_unsaved) {
          // Leaving the best state so far: save it first.
          c.Revert(std::move(ap->record));
          out.best_state = c;
          ap->record = c.Apply(ap->proposal.edit);
          best_unsaved = false;
        }
        if (lik) {
          lik->Commit();
          log_lik = lik->total();
        }
        if (tracker) tracker->OnAccepted(ap->proposal.edit, ap->record);
        log_prior = UnnormalizedLogDensity(c.stats(), p);
        if (objective() > best) {
          best = objective();
          best_unsaved = true;
        }
      } else {
        if (lik) lik->Discard();
        c.Revert(std::move(ap->record));
      }
    }
    if (i >= cfg.burn_in && (i - cfg.burn_in + 1) % cfg.thin == 0) {
      ++report.retained;
      edge_sum += c.num_edges();
      if (tracker) tracker->Tick();
      if (options.observer) options.observer->OnSample(c);
      report.trace.push_back({i + 1, temperature, log_prior, log_lik, c.num_edges()});
    }
  }
  if (tracker) tracker->FlushInto(options.accumulator);
  if (options.track_best && best_unsaved) out.best_state = c;
  report.proposals = total;
  report.mean_edges = report.retained > 0 ? edge_sum / report.retained : 0.0;
  report.best_objective = best;
  report.final_objective = objective();
  report.final_log_posterior = log_prior + log_lik;
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

MultiChainResult Gather(std::vector<std::optional<ChainResult>>&& results,
                        std::vector<PosteriorAccumulator>&& accs) {
  MultiChainResult out;
  for (size_t k = 0; k < results.size(); ++k) {
    if (k == 0) {
      out.accumulator = std::move(accs[0]);
    } else {
      out.accumulator.Merge(accs[k]);
    }
    out.chains.push_back(std::move(*results[k]));
  }
  return out;
}

ChainOptions ForChain(const ChainOptions& base, int k, PosteriorAccumulator* acc) {
  ChainOptions o = base;
  o.stream = base.stream + static_cast<std::uint64_t>(k);
  o.accumulator = acc;
  return o;
}

}  // namespace

ChainResult RunChain(const SamplerConfig& cfg, const ChainOptions& options) {
  return Run(cfg, options);
}

ChainResult Anneal(const SamplerConfig& cfg, const ChainOptions& options) {
  ChainOptions o = options;
  o.track_best = true;
  return Run(cfg, o);
}

MultiChainResult RunChainsSerial(const SamplerConfig& cfg, const ChainOptions& options, int n) {
  const GridSpec grid(cfg.arak.window, cfg.raster_cell_size);
  std::vector<PosteriorAccumulator> accs(n, PosteriorAccumulator(grid));
  std::vector<std::optional<ChainResult>> results(n);
  for (int k = 0; k < n; ++k) results[k] = Run(cfg, ForChain(options, k, &accs[k]));
  return Gather(std::move(results), std::move(accs));
}

MultiChainResult RunChainsParallel(const SamplerConfig& cfg, const ChainOptions& options, int n) {
  const GridSpec grid(cfg.arak.window, cfg.raster_cell_size);
  std::vector<PosteriorAccumulator> accs(n, PosteriorAccumulator(grid));
  std::vector<std::optional<ChainResult>> results(n);
  #pragma omp parallel for schedule(dynamic, 1)
  for (int k = 0; k < n; ++k) results[k] = Run(cfg, ForChain(options, k, &accs[k]));
  return Gather(std::move(results), std::move(accs));
}

}  // namespace prf
