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

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace gamedec {

/// Players are identified by their index in [0, N).
using PlayerId = int;

/// One choice index per player; choice a_i lies in [0, choices(i)).
using Choice = int;
using StrategyProfile = std::vector<Choice>;

/// A profile restricted to a subset of players. `support` is strictly
/// ascending; `choices[k]` is the choice of `support[k]`.
struct PartialProfile {
  std::vector<PlayerId> support;
  std::vector<Choice> choices;

  bool operator==(const PartialProfile&) const = default;
};

/// Number of joint profiles over the given choice counts, saturating at
/// UINT64_MAX on overflow.
std::uint64_t profile_space_size(std::span<const int> choice_counts);

/// Flat index of a choice tuple: scope entries in the given order, the
/// last entry varying fastest. Inverse of unflatten_profile.
std::uint64_t flatten_profile(std::span<const Choice> choices,
                              std::span<const int> choice_counts);
void unflatten_profile(std::uint64_t index, std::span<const int> choice_counts,
                       std::span<Choice> out);

/// Restricts a full profile to `support` (ascending player indices,
/// duplicates rejected). Throws std::invalid_argument on players outside
/// the profile.
PartialProfile extract_partial(const StrategyProfile& profile,
                               std::span<const PlayerId> support);

/// An N-player normal-form game behind a black-box utility oracle.
/// Immutable after construction except the evaluation counter, which is
/// atomic; the oracle must be callable from multiple threads.
class Game {
 public:
  using Oracle = std::function<double(PlayerId, const StrategyProfile&)>;

  Game(std::vector<int> choice_counts, Oracle oracle);

  Game(const Game&) = delete;
  Game& operator=(const Game&) = delete;

  int num_players() const { return static_cast<int>(choice_counts_.size()); }
  int choices(PlayerId i) const { return choice_counts_[i]; }
  const std::vector<int>& choice_counts() const { return choice_counts_; }
  std::uint64_t num_profiles() const;

  /// Evaluates u_i(a). Each call bumps the evaluation counter by one.
  double utility(PlayerId i, const StrategyProfile& profile) const;

  long long eval_count() const { return evals_.load(std::memory_order_relaxed); }
  void reset_eval_count() const { evals_.store(0, std::memory_order_relaxed); }

 private:
  std::vector<int> choice_counts_;
  Oracle oracle_;
  mutable std::atomic<long long> evals_{0};
};

/// One player's utility table over a scope of players. `scope` is
/// ascending and `values` is flat over the scope's joint choices, last
/// scope player varying fastest.
struct UtilityTable {
  PlayerId player = 0;
  std::vector<PlayerId> scope;
  std::vector<double> values;

  bool operator==(const UtilityTable&) const = default;
};

/// A fully tabulated game: the serializable form, and the backing store
/// for generated games.
struct GameTables {
  std::vector<int> choice_counts;
  std::vector<UtilityTable> tables;  // exactly one per player
  std::optional<std::uint64_t> seed;

  bool operator==(const GameTables&) const = default;
};

/// Wraps tables into a Game whose oracle is a table lookup.
/// Validates shape: one table per player, ascending scopes, value counts.
std::shared_ptr<Game> make_game(GameTables tables);

/// A game restricted to a subset of players. Two backings:
///  - a restriction view: utilities delegate to the parent oracle with
///    non-member choices pinned to 0 (exact when members are closed
///    under influence, detectably wrong otherwise);
///  - explicit tables: per-member utilities over the member scope,
///    used for fitted linear decompositions.
class PartialGame {
 public:
  static PartialGame restriction(std::shared_ptr<const Game> parent,
                                 std::vector<PlayerId> members);
  static PartialGame from_tables(std::shared_ptr<const Game> parent,
                                 std::vector<PlayerId> members,
                                 std::vector<std::vector<double>> member_tables);

  const std::shared_ptr<const Game>& parent() const { return parent_; }
  const std::vector<PlayerId>& members() const { return members_; }
  int num_members() const { return static_cast<int>(members_.size()); }
  const std::vector<int>& member_choice_counts() const { return member_choices_; }
  std::uint64_t num_profiles() const;
  bool table_backed() const { return !tables_.empty(); }
  const std::vector<std::vector<double>>& tables() const { return tables_; }

  /// u_{(k,i)}(partial profile over the member set). The profile's
  /// support must equal the member set.
  double utility(PlayerId member, const PartialProfile& profile) const;

 private:
  PartialGame() = default;

  std::shared_ptr<const Game> parent_;
  std::vector<PlayerId> members_;
  std::vector<int> member_choices_;
  std::vector<std::vector<double>> tables_;  // empty for restriction views
};

/// Restriction view over `members`; exact subgame whenever the member
/// set is influence-closed. Throws on empty or invalid members.
PartialGame make_partial_game(std::shared_ptr<const Game> game,
                              std::vector<PlayerId> members);

}  // namespace gamedec
