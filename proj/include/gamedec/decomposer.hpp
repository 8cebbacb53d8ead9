// Copyright 2026 The gamedec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "gamedec/game.hpp"
#include "gamedec/spectral.hpp"

namespace gamedec {

/// A game split along the connected components of its influence graph.
/// Component subgames are restrictions of the parent: they answer
/// utility queries by pinning every non-member to choice 0, which is
/// value-preserving exactly when the components really are independent.
struct ComponentDecomposition {
  std::vector<std::vector<PlayerId>> components;
  std::vector<PartialGame> parts;
};

ComponentDecomposition decompose_by_components(
    std::shared_ptr<const Game> game, const InteractionGraph& graph);

/// A weighted-sum-of-subgames model of a combined game: for every player
/// i and profile a,
///   u_i(a)  ~=  sum over parts k containing i of
///               weights[k] * parts[k]->utility(i, a restricted to S_k).
/// Parts are table-backed so they can be serialized and solved on their
/// own.
struct LinearDecomposition {
  std::vector<PartialGame> parts;
  std::vector<double> weights;
};

/// Outcome of checking a linear decomposition against the combined game.
struct ResidualReport {
  double max_abs_error = 0.0;
  double tolerance = 0.0;          // 1e-9 * (1 + largest |utility| seen)
  std::uint64_t profiles_checked = 0;
  bool exhaustive = false;
  bool ok() const { return max_abs_error <= tolerance; }
};

inline constexpr std::uint64_t kExhaustiveCap = 1'000'000;
inline constexpr std::uint64_t kVerifySamples = 100'000;

/// Measures the worst reconstruction error of the model over the profile
/// space: every profile when the space has at most kExhaustiveCap
/// entries, else kVerifySamples random profiles drawn from `seed`.
/// Throws NegativeWeightError if any weight is negative.
ResidualReport verify_linear(const Game& combined,
                             const LinearDecomposition& decomposition,
                             std::uint64_t seed = 0);

struct FitResult {
  bool feasible = false;
  LinearDecomposition decomposition;
  ResidualReport report;
};

inline constexpr int kFitDimensionCap = 512;

/// Least-squares fit of part utility tables for the given member sets,
/// with all weights fixed at 1. Per player the fit is the minimum-norm
/// solution of the normal equations (via spectral pseudo-inverse), then
/// re-gauged so that of the parts sharing a player, all but the first
/// carry zero-mean tables. feasible is true when the fitted model
/// reproduces the combined game within the verification tolerance.
/// Throws CapacityError when one player's stacked table length exceeds
/// kFitDimensionCap.
FitResult fit_linear(std::shared_ptr<const Game> combined,
                     const std::vector<std::vector<PlayerId>>& member_sets,
                     std::uint64_t seed = 0);

}  // namespace gamedec
