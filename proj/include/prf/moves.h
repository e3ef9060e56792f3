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

#ifndef PRF_MOVES_H_
#define PRF_MOVES_H_

#include <array>
#include <optional>
#include <string_view>

#include "prf/arak_prior.h"
#include "prf/coloring.h"
#include "prf/rng.h"

namespace prf {

enum class MoveKind : int {
  kTriangleBirth,
  kTriangleDeath,
  kWedgeBirth,
  kWedgeDeath,
  kChordBirth,
  kChordDeath,
  kKinkBirth,
  kKinkDeath,
  kRelocate,
  kBoundarySlide,
  kSlideAlongEdge,
  kRecolor,
  kLocalRecolor,
};

inline constexpr int kNumMoveKinds = 13;

MoveKind InverseKind(MoveKind kind);
std::string_view MoveKindName(MoveKind kind);

struct MoveWeights {
  std::array<double, kNumMoveKinds> w = {0.08, 0.08, 0.08, 0.08, 0.08, 0.08, 0.08,
                                         0.08, 0.10, 0.05, 0.10, 0.03, 0.08};
  double operator[](MoveKind k) const { return w[static_cast<int>(k)]; }
  double& operator[](MoveKind k) { return w[static_cast<int>(k)]; }
};

struct MoveParams {
  MoveWeights weights;
  // Relocate disk radius, boundary slide half-width and kink half-height.
  double delta = 0.25;
};

// Throws std::invalid_argument unless weights are non-negative, sum to 1 and
// paired birth/death kinds are equal, and delta > 0.
void CheckMoveParams(const MoveParams& params);

struct MoveProposal {
  MoveKind kind = MoveKind::kTriangleBirth;
  Edit edit;
  double log_forward = 0.0;
  double log_reverse = 0.0;
};

// Draws the edit of one move kind. Empty when the kind has nothing to act on
// or draws a configuration the kind cannot produce (immediate rejection).
std::optional<Edit> SampleEdit(MoveKind kind, const Coloring& c,
                               const MoveParams& params, Rng& rng);

// Log density (including the kind's weight) that a move of this kind proposes
// exactly this edit from state c, with respect to the unordered Lebesgue base
// measure on new vertex locations; -inf if it cannot.
double LogProposalDensity(MoveKind kind, const Coloring& c, const Edit& edit,
                          const MoveParams& params);

MoveKind SampleKind(const MoveParams& params, Rng& rng);

// A proposal applied to the coloring, still revertible.
struct AppliedProposal {
  MoveProposal proposal;
  ChangeRecord record;
};

// Draws a kind and an edit, applies it and evaluates both proposal densities.
// Returns empty (state untouched) for immediate rejections: nothing to act on,
// invalid geometry, or an unreachable reverse.
std::optional<AppliedProposal> ProposeAndApply(Coloring& c,
                                               const MoveParams& params,
                                               Rng& rng,
                                               MoveKind* drawn_kind = nullptr);
std::optional<AppliedProposal> ProposeAndApplyKind(MoveKind kind, Coloring& c,
                                                   const MoveParams& params,
                                                   Rng& rng);

// (prior + likelihood) / T + log_reverse - log_forward. -inf deltas reject.
double AcceptanceLogRatio(double prior_delta, double likelihood_delta,
                          const MoveProposal& proposal, double temperature);
// Tempered Gibbs form: the base measure change enters untempered,
// measure + (-potential + likelihood) / T + log_reverse - log_forward.
// Equal to the above at T = 1.
double AcceptanceLogRatio(double measure_delta, double potential_delta,
                          double likelihood_delta, const MoveProposal& proposal,
                          double temperature);

}  // namespace prf

#endif  // PRF_MOVES_H_
