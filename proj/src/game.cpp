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

#include "gamedec/game.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace gamedec {

std::uint64_t profile_space_size(std::span<const int> choice_counts) {
  std::uint64_t product = 1;
  for (int c : choice_counts) {
    if (c < 1) throw std::invalid_argument("profile_space_size: choice count < 1");
    const auto factor = static_cast<std::uint64_t>(c);
    if (product > UINT64_MAX / factor) return UINT64_MAX;
    product *= factor;
  }
  return product;
}

std::uint64_t flatten_profile(std::span<const Choice> choices,
                              std::span<const int> choice_counts) {
  std::uint64_t index = 0;
  for (std::size_t k = 0; k < choices.size(); ++k) {
    index = index * static_cast<std::uint64_t>(choice_counts[k]) +
            static_cast<std::uint64_t>(choices[k]);
  }
  return index;
}

void unflatten_profile(std::uint64_t index, std::span<const int> choice_counts,
                       std::span<Choice> out) {
  for (std::size_t k = choice_counts.size(); k-- > 0;) {
    const auto c = static_cast<std::uint64_t>(choice_counts[k]);
    out[k] = static_cast<Choice>(index % c);
    index /= c;
  }
}

PartialProfile extract_partial(const StrategyProfile& profile,
                               std::span<const PlayerId> support) {
  PartialProfile out;
  out.support.assign(support.begin(), support.end());
  std::sort(out.support.begin(), out.support.end());
  if (std::adjacent_find(out.support.begin(), out.support.end()) != out.support.end())
    throw std::invalid_argument("extract_partial: duplicate player in support");
  out.choices.reserve(out.support.size());
  const int n = static_cast<int>(profile.size());
  for (PlayerId p : out.support) {
    if (p < 0 || p >= n)
      throw std::invalid_argument("extract_partial: player " + std::to_string(p) +
                                  " outside the profile");
    out.choices.push_back(profile[p]);
  }
  return out;
}

Game::Game(std::vector<int> choice_counts, Oracle oracle)
    : choice_counts_(std::move(choice_counts)), oracle_(std::move(oracle)) {
  if (choice_counts_.empty()) throw std::invalid_argument("Game: no players");
  for (int c : choice_counts_)
    if (c < 1) throw std::invalid_argument("Game: every choice count must be >= 1");
  if (!oracle_) throw std::invalid_argument("Game: null oracle");
}

std::uint64_t Game::num_profiles() const { return profile_space_size(choice_counts_); }

double Game::utility(PlayerId i, const StrategyProfile& profile) const {
  if (i < 0 || i >= num_players())
    throw std::invalid_argument("Game::utility: unknown player " + std::to_string(i));
  if (profile.size() != choice_counts_.size())
    throw std::invalid_argument("Game::utility: profile covers " +
                                std::to_string(profile.size()) + " players, game has " +
                                std::to_string(choice_counts_.size()));
  evals_.fetch_add(1, std::memory_order_relaxed);
  return oracle_(i, profile);
}

namespace {

// Table lookup state shared by the oracle closure.
struct TableOracle {
  std::vector<int> choice_counts;
  std::vector<UtilityTable> tables;  // indexed by player

  double operator()(PlayerId i, const StrategyProfile& profile) const {
    const UtilityTable& t = tables[i];
    std::uint64_t index = 0;
    for (std::size_t k = 0; k < t.scope.size(); ++k) {
      index = index * static_cast<std::uint64_t>(choice_counts[t.scope[k]]) +
              static_cast<std::uint64_t>(profile[t.scope[k]]);
    }
    return t.values[index];
  }
};

}  // namespace

std::shared_ptr<Game> make_game(GameTables tables) {
  const int n = static_cast<int>(tables.choice_counts.size());
  if (n == 0) throw std::invalid_argument("make_game: no players");
  if (static_cast<int>(tables.tables.size()) != n)
    throw std::invalid_argument("make_game: expected one table per player");

  std::sort(tables.tables.begin(), tables.tables.end(),
            [](const UtilityTable& a, const UtilityTable& b) { return a.player < b.player; });
  for (int i = 0; i < n; ++i) {
    const UtilityTable& t = tables.tables[i];
    if (t.player != i)
      throw std::invalid_argument("make_game: missing or duplicate table for player " +
                                  std::to_string(i));
    if (!std::is_sorted(t.scope.begin(), t.scope.end()) ||
        std::adjacent_find(t.scope.begin(), t.scope.end()) != t.scope.end())
      throw std::invalid_argument("make_game: scope of player " + std::to_string(i) +
                                  " must be strictly ascending");
    std::vector<int> scope_counts;
    for (PlayerId p : t.scope) {
      if (p < 0 || p >= n)
        throw std::invalid_argument("make_game: scope of player " + std::to_string(i) +
                                    " names unknown player " + std::to_string(p));
      scope_counts.push_back(tables.choice_counts[p]);
    }
    if (t.values.size() != profile_space_size(scope_counts))
      throw std::invalid_argument("make_game: table size mismatch for player " +
                                  std::to_string(i));
  }

  auto oracle = std::make_shared<TableOracle>();
  oracle->choice_counts = tables.choice_counts;
  oracle->tables = std::move(tables.tables);
  auto counts = oracle->choice_counts;
  return std::make_shared<Game>(
      std::move(counts),
      [oracle](PlayerId i, const StrategyProfile& a) { return (*oracle)(i, a); });
}

PartialGame PartialGame::restriction(std::shared_ptr<const Game> parent,
                                     std::vector<PlayerId> members) {
  if (!parent) throw std::invalid_argument("PartialGame: null parent");
  if (members.empty()) throw std::invalid_argument("PartialGame: empty member set");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (PlayerId p : members)
    if (p < 0 || p >= parent->num_players())
      throw std::invalid_argument("PartialGame: member " + std::to_string(p) +
                                  " is not a player of the parent game");
  PartialGame pg;
  pg.parent_ = std::move(parent);
  pg.members_ = std::move(members);
  for (PlayerId p : pg.members_) pg.member_choices_.push_back(pg.parent_->choices(p));
  return pg;
}

PartialGame PartialGame::from_tables(std::shared_ptr<const Game> parent,
                                     std::vector<PlayerId> members,
                                     std::vector<std::vector<double>> member_tables) {
  PartialGame pg = restriction(std::move(parent), std::move(members));
  if (member_tables.size() != pg.members_.size())
    throw std::invalid_argument("PartialGame: expected one table per member");
  const std::uint64_t space = pg.num_profiles();
  for (const auto& t : member_tables)
    if (t.size() != space)
      throw std::invalid_argument("PartialGame: member table size mismatch");
  pg.tables_ = std::move(member_tables);
  return pg;
}

std::uint64_t PartialGame::num_profiles() const {
  return profile_space_size(member_choices_);
}

double PartialGame::utility(PlayerId member, const PartialProfile& profile) const {
  if (profile.support != members_)
    throw std::invalid_argument("PartialGame::utility: profile support differs from members");
  const auto pos = std::lower_bound(members_.begin(), members_.end(), member);
  if (pos == members_.end() || *pos != member)
    throw std::invalid_argument("PartialGame::utility: player " + std::to_string(member) +
                                " is not a member");
  if (!tables_.empty()) {
    const auto member_index = static_cast<std::size_t>(pos - members_.begin());
    return tables_[member_index][flatten_profile(profile.choices, member_choices_)];
  }
  // Non-members pinned to choice 0. Independent of the pin whenever the
  // member set is influence-closed.
  StrategyProfile full(parent_->num_players(), 0);
  for (std::size_t k = 0; k < members_.size(); ++k) full[members_[k]] = profile.choices[k];
  return parent_->utility(member, full);
}

PartialGame make_partial_game(std::shared_ptr<const Game> game,
                              std::vector<PlayerId> members) {
  return PartialGame::restriction(std::move(game), std::move(members));
}

}  // namespace gamedec
