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

#include "prf/prior_stats.h"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "prf/arak_prior.h"
#include "prf/chain.h"
#include "prf/rng.h"

namespace prf {
namespace {

struct Pair {
  Point2 a, b;
};

class PairCounter : public SampleObserver {
 public:
  explicit PairCounter(const std::vector<std::vector<Pair>>* pairs)
      : pairs_(pairs), same_(pairs->size(), 0) {}

  void OnSample(const Coloring& c) override {
    ++samples_;
    edges_ += c.num_edges();
    for (size_t d = 0; d < pairs_->size(); ++d) {
      for (const Pair& pr : (*pairs_)[d]) {
        if (c.CrossingParity(pr.a, pr.b) == 0) ++same_[d];
      }
    }
  }

  const std::vector<std::vector<Pair>>* pairs_;
  std::vector<std::int64_t> same_;
  std::int64_t samples_ = 0;
  std::int64_t edges_ = 0;
};

std::vector<std::vector<Pair>> DrawPairs(const PriorStatsOptions& o, const Rect& window) {
  Rng rng(StreamSeed(o.seed, 0x9a175ULL));
  std::vector<std::vector<Pair>> pairs(o.distances.size());
  for (size_t k = 0; k < o.distances.size(); ++k) {
    const double d = o.distances[k];
    while (static_cast<int>(pairs[k].size()) < o.pairs_per_distance) {
      const Point2 a{UniformReal(rng, window.min.x, window.max.x),
                     UniformReal(rng, window.min.y, window.max.y)};
      const double t = UniformReal(rng, 0.0, 2.0 * M_PI);
      const Point2 b{a.x + d * std::cos(t), a.y + d * std::sin(t)};
      if (window.Contains(b)) pairs[k].push_back({a, b});
    }
  }
  return pairs;
}

}  // namespace

bool PriorStatsResult::pairs_pass() const {
  for (const PairStat& s : pairs) {
    if (!s.pass) return false;
  }
  return true;
}

PriorStatsResult RunPriorStats(const PriorStatsOptions& o) {
  SamplerConfig cfg;
  cfg.arak.p = o.p;
  cfg.arak.window = Rect{{0.0, 0.0}, {1.0, 1.0}};
  cfg.burn_in = o.burn_in;
  cfg.steps = o.steps;
  cfg.thin = o.thin;
  cfg.seed = o.seed;
  const auto pairs = DrawPairs(o, cfg.arak.window);

  PriorStatsResult r;
  r.p = o.p;
  std::vector<std::int64_t> same(pairs.size(), 0);
  std::int64_t edges = 0;
  for (int chain = 0; chain < o.chains; ++chain) {
    PairCounter counter(&pairs);
    ChainOptions opts;
    opts.observer = &counter;
    opts.stream = chain;
    const ChainResult res = RunChain(cfg, opts);
    r.samples += counter.samples_;
    edges += counter.edges_;
    for (size_t d = 0; d < same.size(); ++d) same[d] += counter.same_[d];
    r.proposals += res.report.proposals;
    r.seconds += res.report.seconds;
  }
  r.expected_edges = ExpectedEdgeCount(cfg.arak);
  r.mean_edges = r.samples > 0 ? static_cast<double>(edges) / r.samples : 0.0;
  r.edge_relative_error = std::abs(r.mean_edges - r.expected_edges) / r.expected_edges;
  r.edges_pass = r.samples > 0 && r.edge_relative_error <= o.edge_tolerance;
  for (size_t d = 0; d < pairs.size(); ++d) {
    PairStat s;
    s.distance = o.distances[d];
    s.expected = SameColorProbability(o.p, s.distance);
    const double n = static_cast<double>(r.samples) * pairs[d].size();
    s.observed = n > 0 ? same[d] / n : 0.0;
    s.pass = n > 0 && std::abs(s.observed - s.expected) <= o.pair_tolerance;
    r.pairs.push_back(s);
  }
  return r;
}

void WritePriorStats(std::ostream& os, const PriorStatsResult& r) {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "%s edge-count p=%g mean=%.4f expected=%.4f rel_err=%.4f samples=%lld\n",
                r.edges_pass ? "PASS" : "FAIL", r.p, r.mean_edges, r.expected_edges,
                r.edge_relative_error, static_cast<long long>(r.samples));
  os << buf;
  for (const PairStat& s : r.pairs) {
    std::snprintf(buf, sizeof(buf), "%s two-point p=%g d=%g observed=%.4f expected=%.4f\n",
                  s.pass ? "PASS" : "FAIL", r.p, s.distance, s.observed, s.expected);
    os << buf;
  }
}

}  // namespace prf
