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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "gamedec/errors.hpp"
#include "gamedec/game.hpp"
#include "gamedec/generator.hpp"
#include "gamedec/serialize.hpp"

using namespace gamedec;

namespace {

// 2 players, choices {2, 3}; player 0 reacts to both, player 1 only to
// itself. Values chosen to be distinct per index.
GameTables tiny_tables() {
  GameTables t;
  t.choice_counts = {2, 3};
  UtilityTable u0;
  u0.player = 0;
  u0.scope = {0, 1};
  u0.values = {0, 1, 2, 10, 11, 12};  // index a0*3 + a1
  UtilityTable u1;
  u1.player = 1;
  u1.scope = {1};
  u1.values = {5, 6, 7};
  t.tables = {u0, u1};
  return t;
}

}  // namespace

TEST_CASE("profile flattening is row-major with the last axis fastest") {
  const std::vector<int> counts = {2, 3, 2};
  CHECK(profile_space_size(counts) == 12);

  std::uint64_t flat = 0;
  for (Choice a0 = 0; a0 < 2; ++a0) {
    for (Choice a1 = 0; a1 < 3; ++a1) {
      for (Choice a2 = 0; a2 < 2; ++a2) {
        const std::vector<Choice> p = {a0, a1, a2};
        CHECK(flatten_profile(p, counts) == flat);
        std::vector<Choice> back(3);
        unflatten_profile(flat, counts, back);
        CHECK(back == p);
        ++flat;
      }
    }
  }
}

TEST_CASE("profile space size saturates instead of overflowing") {
  const std::vector<int> counts(70, 2);  // 2^70 > UINT64_MAX
  CHECK(profile_space_size(counts) == UINT64_MAX);
}

TEST_CASE("extract_partial keeps support order and validates players") {
  const StrategyProfile full = {1, 0, 2, 1};
  const std::vector<PlayerId> support = {0, 2};
  const PartialProfile part = extract_partial(full, support);
  CHECK(part.support == support);
  CHECK(part.choices == std::vector<Choice>{1, 2});
  const std::vector<PlayerId> outside = {0, 9};
  CHECK_THROWS_AS(extract_partial(full, outside), std::invalid_argument);
  // Unsorted support is normalized to ascending order.
  const std::vector<PlayerId> unsorted = {2, 0};
  CHECK(extract_partial(full, unsorted) == part);
  const std::vector<PlayerId> dup = {0, 0};
  CHECK_THROWS_AS(extract_partial(full, dup), std::invalid_argument);
}

TEST_CASE("table-backed game looks utilities up correctly") {
  const auto game = make_game(tiny_tables());
  CHECK(game->num_players() == 2);
  CHECK(game->choices(0) == 2);
  CHECK(game->choices(1) == 3);
  CHECK(game->num_profiles() == 6);

  for (Choice a0 = 0; a0 < 2; ++a0) {
    for (Choice a1 = 0; a1 < 3; ++a1) {
      const StrategyProfile p = {a0, a1};
      CHECK(game->utility(0, p) == doctest::Approx(a0 * 10.0 + a1));
      CHECK(game->utility(1, p) == doctest::Approx(5.0 + a1));
    }
  }
}

TEST_CASE("utility evaluations are counted") {
  const auto game = make_game(tiny_tables());
  game->reset_eval_count();
  CHECK(game->eval_count() == 0);
  (void)game->utility(0, {0, 0});
  (void)game->utility(1, {1, 2});
  CHECK(game->eval_count() == 2);
  game->reset_eval_count();
  CHECK(game->eval_count() == 0);
}

TEST_CASE("game table validation rejects malformed inputs") {
  GameTables t = tiny_tables();
  SUBCASE("missing table") {
    t.tables.pop_back();
    CHECK_THROWS_AS(make_game(t), std::invalid_argument);
  }
  SUBCASE("scope omits the owner") {
    t.tables[1].scope = {0};
    CHECK_THROWS_AS(make_game(t), std::invalid_argument);
  }
  SUBCASE("scope not ascending") {
    t.tables[0].scope = {1, 0};
    CHECK_THROWS_AS(make_game(t), std::invalid_argument);
  }
  SUBCASE("wrong value count") {
    t.tables[0].values.pop_back();
    CHECK_THROWS_AS(make_game(t), std::invalid_argument);
  }
  SUBCASE("nonpositive choice count") {
    t.choice_counts[0] = 0;
    CHECK_THROWS_AS(make_game(t), std::invalid_argument);
  }
}

TEST_CASE("restriction views are exact on influence-closed member sets") {
  // Two independent pairs: {0,1} and {2,3}.
  GeneratorSpec spec;
  spec.n_players = 4;
  spec.choices_per_player = 3;
  spec.influencer_sets = {{0, 1}, {0, 1}, {2, 3}, {2, 3}};
  spec.rng_seed = 11;
  const auto game = make_game(generate_game(spec));

  const PartialGame part = PartialGame::restriction(game, {0, 1});
  CHECK(part.num_members() == 2);
  CHECK(part.num_profiles() == 9);
  CHECK_FALSE(part.table_backed());

  // The restriction must agree with the full game no matter what the
  // outsiders do, because members only react to members.
  for (Choice a0 = 0; a0 < 3; ++a0) {
    for (Choice a1 = 0; a1 < 3; ++a1) {
      PartialProfile pp;
      pp.support = {0, 1};
      pp.choices = {a0, a1};
      const double at_zero = part.utility(0, pp);
      for (Choice a2 = 0; a2 < 3; ++a2) {
        for (Choice a3 = 0; a3 < 3; ++a3) {
          const StrategyProfile full = {a0, a1, a2, a3};
          CHECK(game->utility(0, full) == doctest::Approx(at_zero));
        }
      }
    }
  }
}

TEST_CASE("partial game rejects bad construction and bad queries") {
  const auto game = make_game(tiny_tables());
  CHECK_THROWS_AS(PartialGame::restriction(nullptr, {0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(PartialGame::restriction(game, {}), std::invalid_argument);
  // Duplicate members collapse into one.
  CHECK(PartialGame::restriction(game, {0, 0}).num_members() == 1);
  CHECK_THROWS_AS(PartialGame::restriction(game, {0, 5}),
                  std::invalid_argument);

  const PartialGame part = PartialGame::restriction(game, {1});
  PartialProfile wrong;
  wrong.support = {0};
  wrong.choices = {0};
  CHECK_THROWS_AS(part.utility(1, wrong), std::invalid_argument);
  PartialProfile right;
  right.support = {1};
  right.choices = {2};
  CHECK(part.utility(1, right) == doctest::Approx(7.0));
  CHECK_THROWS_AS(part.utility(0, right), std::invalid_argument);
}

TEST_CASE("table-backed partial games serve their own tables") {
  const auto game = make_game(tiny_tables());
  // One member (player 1), table over its 3 choices.
  const PartialGame part =
      PartialGame::from_tables(game, {1}, {{40.0, 41.0, 42.0}});
  CHECK(part.table_backed());
  PartialProfile pp;
  pp.support = {1};
  pp.choices = {2};
  CHECK(part.utility(1, pp) == doctest::Approx(42.0));
  CHECK_THROWS_AS(
      PartialGame::from_tables(nullptr, {1}, {{1.0, 2.0, 3.0}}),
      std::invalid_argument);
  CHECK_THROWS_AS(PartialGame::from_tables(game, {1}, {{1.0}}),
                  std::invalid_argument);
}

TEST_CASE("generated tables are deterministic and in range") {
  GeneratorSpec spec;
  spec.n_players = 6;
  spec.choices_per_player = 2;
  spec.influencer_sets = topology_ring(6);
  spec.payoff_min = -3;
  spec.payoff_max = 4;
  spec.rng_seed = 99;

  const GameTables a = generate_game(spec);
  const GameTables b = generate_game(spec);
  CHECK(a == b);

  spec.rng_seed = 100;
  const GameTables c = generate_game(spec);
  CHECK(a != c);

  for (const UtilityTable& t : a.tables) {
    for (double v : t.values) {
      CHECK(v >= -3.0);
      CHECK(v <= 4.0);
      CHECK(v == doctest::Approx(static_cast<double>(static_cast<int>(v))));
    }
  }
}

TEST_CASE("a player's payoff ignores everyone outside its scope") {
  GeneratorSpec spec;
  spec.n_players = 5;
  spec.choices_per_player = 3;
  spec.influencer_sets = {{0, 2}, {1}, {0, 2}, {3, 4}, {3, 4}};
  spec.rng_seed = 5;
  const auto game = make_game(generate_game(spec));

  // Player 0 reacts to {0, 2} only: toggling 1, 3, 4 never changes it.
  for (std::uint64_t flat = 0; flat < game->num_profiles(); ++flat) {
    std::vector<Choice> p(5);
    unflatten_profile(flat, game->choice_counts(), p);
    const double base = game->utility(0, p);
    for (PlayerId outsider : {1, 3, 4}) {
      StrategyProfile q = p;
      q[static_cast<std::size_t>(outsider)] =
          (q[static_cast<std::size_t>(outsider)] + 1) % 3;
      CHECK(game->utility(0, q) == doctest::Approx(base));
    }
  }
}

TEST_CASE("generator rejects malformed descriptions") {
  GeneratorSpec spec;
  spec.n_players = 2;
  spec.choices_per_player = 2;
  spec.influencer_sets = {{0}, {0}};  // player 1 omits itself
  CHECK_THROWS_AS(generate_game(spec), std::invalid_argument);
  spec.influencer_sets = {{0}};  // wrong set count
  CHECK_THROWS_AS(generate_game(spec), std::invalid_argument);
  spec.influencer_sets = {{0}, {1, 7}};  // out of range
  CHECK_THROWS_AS(generate_game(spec), std::invalid_argument);
  spec.influencer_sets = {{0}, {1}};
  spec.payoff_min = 2;
  spec.payoff_max = 1;
  CHECK_THROWS_AS(generate_game(spec), std::invalid_argument);
}

TEST_CASE("topologies have the promised shapes") {
  SUBCASE("singletons") {
    const auto s = topology_singletons(3);
    CHECK(s == std::vector<std::vector<PlayerId>>{{0}, {1}, {2}});
  }
  SUBCASE("ring") {
    const auto r = topology_ring(4);
    REQUIRE(r.size() == 4);
    CHECK(r[0] == std::vector<PlayerId>{0, 1, 3});
    CHECK(r[1] == std::vector<PlayerId>{0, 1, 2});
    CHECK(r[2] == std::vector<PlayerId>{1, 2, 3});
    CHECK(r[3] == std::vector<PlayerId>{0, 2, 3});
  }
  SUBCASE("clustered blocks never cross") {
    const auto c = topology_clustered(24, 2, 5, 7);
    REQUIRE(c.size() == 24);
    for (int i = 0; i < 24; ++i) {
      CHECK(!c[static_cast<std::size_t>(i)].empty());
      for (PlayerId j : c[static_cast<std::size_t>(i)]) {
        CHECK((i < 12) == (j < 12));  // same block
      }
    }
    // The first core_size players of each block form a mutual clique.
    for (int base : {0, 12}) {
      for (int i = base; i < base + 5; ++i) {
        for (int j = base; j < base + 5; ++j) {
          const auto& set = c[static_cast<std::size_t>(i)];
          CHECK(std::find(set.begin(), set.end(), j) != set.end());
        }
      }
    }
    // Influence is mutual throughout.
    for (int i = 0; i < 24; ++i) {
      for (PlayerId j : c[static_cast<std::size_t>(i)]) {
        const auto& back = c[static_cast<std::size_t>(j)];
        CHECK(std::find(back.begin(), back.end(), i) != back.end());
      }
    }
  }
  SUBCASE("clustered validates its arguments") {
    CHECK_THROWS_AS(topology_clustered(10, 3, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(topology_clustered(10, 2, 9, 0), std::invalid_argument);
  }
}

TEST_CASE("game JSON roundtrips bit for bit") {
  const GameTables t = tiny_tables();
  const Json j = game_to_json(t);
  CHECK(j["players"] == 2);
  CHECK(j["choices"][1] == 3);
  CHECK(j["tables"][0]["scope"][1] == 1);
  const GameTables back = game_from_json(j);
  CHECK(back == t);
}

TEST_CASE("truth JSON roundtrips") {
  const std::vector<std::vector<PlayerId>> sets = {{0, 1}, {0, 1}, {2}};
  const auto back = truth_from_json(truth_to_json(sets));
  CHECK(back == sets);
}

TEST_CASE("game JSON validation fails loudly") {
  Json j = game_to_json(tiny_tables());
  j.erase("tables");
  CHECK_THROWS_AS(game_from_json(j), IoError);
}
