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
#include <string>
#include <vector>

#include "gamedec/decomposer.hpp"
#include "gamedec/game.hpp"

namespace gamedec {

inline constexpr std::uint64_t kProfileCap = 1'000'000;

/// Pure-strategy equilibria. `members` are the players the profiles
/// range over (all of them for a full game); each profile lists choices
/// in member order. evals_used counts scanned profiles — the unit the
/// work comparisons are stated in — not oracle calls.
struct EquilibriumSet {
  std::vector<PlayerId> members;
  std::vector<StrategyProfile> profiles;  // lexicographically ascending
  std::uint64_t evals_used = 0;
};

/// Exhaustive scan: a profile is kept when no player has a strictly
/// improving unilateral deviation. Throws CapacityError when the profile
/// space exceeds the cap.
EquilibriumSet enumerate_nash(const Game& game,
                              std::uint64_t profile_cap = kProfileCap);
EquilibriumSet enumerate_nash(const PartialGame& part,
                              std::uint64_t profile_cap = kProfileCap);

/// True when the full profile's restriction is an equilibrium of the
/// part (no member improves by deviating inside the part).
bool satisfies(const PartialGame& part, const StrategyProfile& full_profile);

/// Cross-check oracle with an independent method: tabulates every
/// utility first, then keeps profiles that are axis maxima for all
/// players. Same output contract as enumerate_nash.
EquilibriumSet brute_force_nash(const Game& game,
                                std::uint64_t profile_cap = kProfileCap);

/// Equilibria of the combined game recovered through a verified linear
/// decomposition, plus the audit trail of how much scanning that took.
struct ConsistencyResult {
  std::vector<StrategyProfile> profiles;  // certified, lex ascending
  std::string status;                     // "found" or "none-exist"
  std::uint64_t evals_used = 0;           // sum of part profile scans
  std::uint64_t certification_evals = 0;  // joined candidates certified
  std::vector<EquilibriumSet> part_equilibria;
};

/// Enumerates each part's equilibria, joins the per-part profiles that
/// agree on shared players (parts visited smallest member set first),
/// then certifies every joined profile as an equilibrium of the combined
/// game within a slack of twice the decomposition residual.
///
/// Preconditions: report.ok() and nonnegative weights — violations throw
/// std::invalid_argument (NegativeWeightError for weights). A certified
/// candidate failing the combined-game check throws std::logic_error,
/// since nonnegative weights plus a verified model make that impossible.
ConsistencyResult consistent_equilibria(const Game& combined,
                                        const LinearDecomposition& decomposition,
                                        const ResidualReport& report);

/// Convenience overload: verifies the decomposition first, then solves.
ConsistencyResult consistent_equilibria(const Game& combined,
                                        const LinearDecomposition& decomposition);

}  // namespace gamedec
