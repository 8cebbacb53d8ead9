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

#include "gamedec/generator.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gamedec/rng.hpp"

namespace gamedec {

namespace {

// Stream tags for independent derivations from one root seed.
constexpr std::uint64_t kTagUtilityTable = 0x7ab1e;
constexpr std::uint64_t kTagTopology = 0x70b0;

void add_mutual_edge(std::vector<std::vector<PlayerId>>& sets, PlayerId a, PlayerId b) {
  sets[a].push_back(b);
  sets[b].push_back(a);
}

std::vector<std::vector<PlayerId>> finalize_sets(std::vector<std::vector<PlayerId>> sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    sets[i].push_back(static_cast<PlayerId>(i));
    std::sort(sets[i].begin(), sets[i].end());
    sets[i].erase(std::unique(sets[i].begin(), sets[i].end()), sets[i].end());
  }
  return sets;
}

}  // namespace

GameTables generate_game(const GeneratorSpec& spec) {
  if (spec.n_players < 1) throw std::invalid_argument("generate_game: n_players < 1");
  if (spec.choices_per_player < 1)
    throw std::invalid_argument("generate_game: choices_per_player < 1");
  if (static_cast<int>(spec.influencer_sets.size()) != spec.n_players)
    throw std::invalid_argument("generate_game: need one influencer set per player");
  if (spec.payoff_min > spec.payoff_max)
    throw std::invalid_argument("generate_game: empty payoff range");

  GameTables out;
  out.choice_counts.assign(spec.n_players, spec.choices_per_player);
  out.seed = spec.rng_seed;
  out.tables.reserve(spec.n_players);

  for (PlayerId i = 0; i < spec.n_players; ++i) {
    UtilityTable t;
    t.player = i;
    t.scope = spec.influencer_sets[i];
    std::sort(t.scope.begin(), t.scope.end());
    t.scope.erase(std::unique(t.scope.begin(), t.scope.end()), t.scope.end());
    if (!std::binary_search(t.scope.begin(), t.scope.end(), i))
      throw std::invalid_argument("generate_game: influencer set of player " +
                                  std::to_string(i) + " must contain the player itself");
    for (PlayerId p : t.scope)
      if (p < 0 || p >= spec.n_players)
        throw std::invalid_argument("generate_game: influencer set of player " +
                                    std::to_string(i) + " names unknown player " +
                                    std::to_string(p));

    std::vector<int> scope_counts(t.scope.size(), spec.choices_per_player);
    const std::uint64_t size = profile_space_size(scope_counts);
    if (size == UINT64_MAX || size > (1ULL << 32))
      throw std::invalid_argument("generate_game: table of player " + std::to_string(i) +
                                  " is too large to tabulate");

    Rng rng = Rng::derive(spec.rng_seed, kTagUtilityTable, static_cast<std::uint64_t>(i));
    t.values.resize(size);
    for (std::uint64_t k = 0; k < size; ++k)
      t.values[k] = static_cast<double>(rng.uniform_int(spec.payoff_min, spec.payoff_max));
    out.tables.push_back(std::move(t));
  }
  return out;
}

std::vector<std::vector<PlayerId>> topology_singletons(int n) {
  std::vector<std::vector<PlayerId>> sets(n);
  return finalize_sets(std::move(sets));
}

std::vector<std::vector<PlayerId>> topology_ring(int n) {
  std::vector<std::vector<PlayerId>> sets(n);
  if (n > 1)
    for (PlayerId i = 0; i < n; ++i) add_mutual_edge(sets, i, (i + 1) % n);
  return finalize_sets(std::move(sets));
}

std::vector<std::vector<PlayerId>> topology_random(int n, double edge_prob,
                                                   std::uint64_t seed) {
  if (edge_prob < 0.0 || edge_prob > 1.0)
    throw std::invalid_argument("topology_random: edge_prob outside [0, 1]");
  std::vector<std::vector<PlayerId>> sets(n);
  Rng rng = Rng::derive(seed, kTagTopology, 0);
  for (PlayerId a = 0; a < n; ++a)
    for (PlayerId b = a + 1; b < n; ++b)
      if (rng.uniform01() < edge_prob) add_mutual_edge(sets, a, b);
  return finalize_sets(std::move(sets));
}

std::vector<std::vector<PlayerId>> topology_clustered(int n, int groups, int core_size,
                                                      std::uint64_t seed) {
  if (groups < 1) throw std::invalid_argument("topology_clustered: groups < 1");
  if (n % groups != 0)
    throw std::invalid_argument("topology_clustered: players not divisible into equal groups");
  const int block = n / groups;
  if (core_size < 1 || core_size > block)
    throw std::invalid_argument("topology_clustered: core_size outside [1, block size]");

  std::vector<std::vector<PlayerId>> sets(n);
  for (int g = 0; g < groups; ++g) {
    const PlayerId base = g * block;
    Rng rng = Rng::derive(seed, kTagTopology, static_cast<std::uint64_t>(g) + 1);
    for (int a = 0; a < core_size; ++a)
      for (int b = a + 1; b < core_size; ++b)
        add_mutual_edge(sets, base + a, base + b);
    // Attachments keep the block connected without growing the core:
    // at most two edges per newcomer, so no mutual group beyond the core
    // can exceed three players.
    for (int p = core_size; p < block; ++p) {
      const int targets = 1 + static_cast<int>(rng.next_below(2));
      PlayerId first = base + static_cast<PlayerId>(rng.next_below(p));
      add_mutual_edge(sets, base + p, first);
      if (targets == 2) {
        PlayerId second = base + static_cast<PlayerId>(rng.next_below(p));
        if (second != first) add_mutual_edge(sets, base + p, second);
      }
    }
  }
  return finalize_sets(std::move(sets));
}

}  // namespace gamedec
