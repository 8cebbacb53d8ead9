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

#include <string>
#include <vector>

#include "json.hpp"

#include "gamedec/decomposer.hpp"
#include "gamedec/equilibrium.hpp"
#include "gamedec/game.hpp"
#include "gamedec/sampler.hpp"
#include "gamedec/spectral.hpp"

namespace gamedec {

using Json = nlohmann::ordered_json;

// Game files:
//   {"players": N, "choices": [c0, ...],
//    "tables": [{"player": i, "scope": [..], "values": [..]}, ...],
//    "seed": s?}
Json game_to_json(const GameTables& tables);
GameTables game_from_json(const Json& j);

// Interaction matrix dump: {"subject": i, "n": N, "L": L, "C": [[..]]}.
Json interaction_to_json(const InteractionMatrix& im);

// Spectral reports (one per subject), carrying the retained eigenpairs
// so a cut can be re-applied without resampling:
//   [{"subject": i, "n": N, "influencers": [..],
//     "pairs": [{"value": v, "cluster": c, "vector": [..]}, ...]}, ...]
Json reports_to_json(const std::vector<InfluenceReport>& reports);
std::vector<InfluenceReport> reports_from_json(const Json& j);

// Ground truth for generated games: the influencer sets plus the graph
// they imply. {"players": N, "influencers": [[..], ...], "edges": ...,
// "components": ...}
Json truth_to_json(const std::vector<std::vector<PlayerId>>& influencer_sets);
std::vector<std::vector<PlayerId>> truth_from_json(const Json& j);

Json recovery_to_json(const RecoveryScore& score);

// Influence graph: {"edges": [{"from": j, "to": i, "strength": s}, ...],
// "components": [[..], ...]}, plus "cut_edges" when edges were cut.
Json graph_to_json(const InteractionGraph& graph);

// Linear decomposition:
//   {"parts": [{"members": [..], "tables": [...]}, ...],
//    "weights": [..], "residual": r}
Json decomposition_to_json(const LinearDecomposition& decomposition,
                           double residual);

/// Rebuilds a table-backed decomposition against `combined` (the parent
/// the parts restrict). Shape errors throw IoError.
LinearDecomposition decomposition_from_json(const Json& j,
                                            std::shared_ptr<const Game> combined);

// Equilibria: {"profiles": [[..], ...], "status": "...", "evals": m}.
Json equilibria_to_json(const std::vector<StrategyProfile>& profiles,
                        const std::string& status, std::uint64_t evals);

/// Graphviz rendering of the influence graph; cut edges come back as
/// dashed gray so the removed structure stays visible.
std::string graph_to_dot(const InteractionGraph& graph);

// File plumbing. All throw IoError with the path in the message.
Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
void write_json_file(const std::string& path, const Json& j);

}  // namespace gamedec
