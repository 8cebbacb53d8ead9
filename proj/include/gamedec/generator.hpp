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
#include <vector>

#include "gamedec/game.hpp"

namespace gamedec {

/// Recipe for a random game with a known interaction structure. Player
/// i's utility is a table over the joint choices of `influencer_sets[i]`
/// (which must contain i) filled with i.i.d. uniform integers in
/// [payoff_min, payoff_max].
struct GeneratorSpec {
  int n_players = 0;
  int choices_per_player = 2;
  std::vector<std::vector<PlayerId>> influencer_sets;
  int payoff_min = 0;
  int payoff_max = 9;
  std::uint64_t rng_seed = 0;
};

/// Builds the utility tables for `spec`. Same seed, same tables, bit for
/// bit. Throws std::invalid_argument when an influencer set omits its
/// own player or the description is otherwise malformed.
GameTables generate_game(const GeneratorSpec& spec);

// Ground-truth topologies for experiments. Every set contains its own
// player; edges beyond that are mutual (j influences i and i influences j).

/// No interactions: influencer set of i is {i}.
std::vector<std::vector<PlayerId>> topology_singletons(int n);

/// Cycle: i is influenced by its two ring neighbours.
std::vector<std::vector<PlayerId>> topology_ring(int n);

/// Each unordered pair becomes a mutual edge with probability edge_prob.
std::vector<std::vector<PlayerId>> topology_random(int n, double edge_prob,
                                                   std::uint64_t seed);

/// `groups` equal blocks of players with no edges between blocks. Each
/// block holds a mutual clique of `core_size` players; the remaining
/// block members attach by one or two mutual edges to earlier members,
/// so the block is connected and its largest mutually-interacting group
/// is the core.
std::vector<std::vector<PlayerId>> topology_clustered(int n, int groups,
                                                      int core_size,
                                                      std::uint64_t seed);

}  // namespace gamedec
