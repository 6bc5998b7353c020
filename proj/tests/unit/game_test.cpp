// Copyright 2026 The edgegame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "edgegame/enumerate.hpp"
#include "edgegame/game.hpp"
#include "edgegame/generators.hpp"
#include "edgegame/graph.hpp"

using namespace edgegame;

namespace {

std::shared_ptr<const Graph> share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

// Plays uniformly random legal moves to the end, checking engine invariants
// after every move. Returns the final status.
Status random_playout(const std::shared_ptr<const Graph>& g, Ruleset rules, std::mt19937_64& rng) {
  GameState s(g, rules);
  while (!s.is_terminal()) {
    auto moves = s.legal_moves();
    EXPECT_FALSE(moves.empty());
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    s.apply(moves[pick(rng)]);
    EXPECT_TRUE(s.coloring_is_proper());
    EXPECT_EQ(s.ply(), s.colored_count());
  }
  return s.status();
}

}  // namespace

TEST(Ruleset, Validation) {
  EXPECT_THROW(Ruleset(0, 3), RulesError);
  EXPECT_THROW(Ruleset(1, -1), RulesError);
  EXPECT_THROW(Ruleset(1, kMaxPalette + 1), RulesError);
  EXPECT_EQ(Ruleset(2, 3).palette(), 0b111u);
}

TEST(NewGame, Examples) {
  GameState p3 = new_game(path_graph(3), Ruleset(2, 2));
  EXPECT_EQ(p3.side_to_move(), Side::maker);
  EXPECT_EQ(p3.maker_submoves_left(), 2);

  GameState empty = new_game(Graph(3, {}), Ruleset(1, 0));
  EXPECT_EQ(empty.status(), Status::maker_win);

  GameState w4 = new_game(wheel_graph(4), Ruleset(3, 5));
  EXPECT_EQ(w4.uncolored_count(), 8);
  EXPECT_EQ(w4.maker_submoves_left(), 3);

  // Fewer edges than m: the turn shrinks.
  EXPECT_EQ(new_game(path_graph(3), Ruleset(5, 2)).maker_submoves_left(), 2);
}

TEST(FeasibleColors, Examples) {
  GameState p3 = new_game(path_graph(3), Ruleset(1, 2));
  EXPECT_EQ(p3.feasible_colors(0), (std::vector<Color>{0, 1}));
  EXPECT_EQ(p3.feasible_colors(1), (std::vector<Color>{0, 1}));

  // W3 with spokes 0, 1, 2: each rim edge keeps the one spoke color it misses.
  auto w3 = share(wheel_graph(3));
  GameState s = replay(w3, Ruleset(3, 3), std::vector<Move>{{0, 0}, {1, 1}, {2, 2}});
  const WheelLayout l = wheel_layout(*w3);
  for (int i = 0; i < 3; ++i) {
    const EdgeIndex r = l.rim[i];
    auto colors = s.feasible_colors(r);
    ASSERT_EQ(colors.size(), 1u);
    const Vertex a = w3->edge(r).u, b = w3->edge(r).v;
    for (int j = 0; j < 3; ++j)
      if (!w3->edge(l.spokes[j]).touches(a) && !w3->edge(l.spokes[j]).touches(b))
        EXPECT_EQ(colors[0], s.color_of(l.spokes[j]));
  }

  // Star edge next to every palette color.
  GameState k14 = replay(share(star_graph(4)), Ruleset(3, 3), std::vector<Move>{{0, 0}, {1, 1}, {2, 2}});
  EXPECT_TRUE(k14.feasible_colors(3).empty());
  EXPECT_THROW(k14.feasible_colors(0), IllegalMove);
}

TEST(LegalMoves, Examples) {
  EXPECT_EQ(new_game(path_graph(2), Ruleset(1, 3)).legal_moves().size(), 3u);
  auto w4 = new_game(wheel_graph(4), Ruleset(1, 4)).legal_moves();
  EXPECT_EQ(w4.size(), 32u);
  EXPECT_TRUE(std::is_sorted(w4.begin(), w4.end()));
}

TEST(ApplyMove, BlockedPositionIsBreakerWin) {
  GameState s = new_game(path_graph(3), Ruleset(1, 1));
  s = apply_move(s, {0, 0});
  EXPECT_EQ(s.status(), Status::breaker_win);
  EXPECT_TRUE(s.legal_moves().empty());
  EXPECT_THROW(apply_move(s, {1, 0}), IllegalMove);
}

TEST(ApplyMove, LastEdgeIsMakerWin) {
  GameState s = apply_move(new_game(path_graph(2), Ruleset(1, 1)), {0, 0});
  EXPECT_EQ(s.status(), Status::maker_win);
}

TEST(ApplyMove, MidTurnBlockIsBreakerWin) {
  auto g = share(star_graph(3));
  GameState s(g, Ruleset(2, 2));
  s.apply({0, 0});
  EXPECT_EQ(s.side_to_move(), Side::maker);
  s.apply({1, 1});
  // Breaker to move and the last edge has no feasible color.
  EXPECT_EQ(s.status(), Status::breaker_win);

  GameState t(share(star_graph(4)), Ruleset(3, 2));
  t.apply({0, 0});
  t.apply({1, 1});  // Maker still owes a sub-move but nothing is colorable
  EXPECT_EQ(t.status(), Status::breaker_win);
}

TEST(ApplyMove, TurnAccounting) {
  GameState s = new_game(path_graph(6), Ruleset(2, 3));
  s.apply({0, 0});
  EXPECT_EQ(s.side_to_move(), Side::maker);
  EXPECT_EQ(s.maker_submoves_left(), 1);
  s.apply({2, 0});
  EXPECT_EQ(s.side_to_move(), Side::breaker);
  s.apply({4, 1});
  EXPECT_EQ(s.side_to_move(), Side::maker);
  EXPECT_EQ(s.maker_submoves_left(), 2);
  s.apply({1, 2});
  s.apply({3, 2});
  EXPECT_EQ(s.status(), Status::maker_win);
}

TEST(ApplyMove, RejectsIllegal) {
  GameState s = new_game(path_graph(3), Ruleset(1, 3));
  EXPECT_THROW(s.apply({5, 0}), IllegalMove);
  EXPECT_THROW(s.apply({0, 3}), IllegalMove);
  s.apply({0, 1});
  EXPECT_THROW(s.apply({0, 2}), IllegalMove);  // already colored
  EXPECT_THROW(s.apply({1, 1}), IllegalMove);  // clashes at the middle vertex
}

TEST(Replay, EmptyAndErrorIndex) {
  auto g = share(path_graph(4));
  EXPECT_EQ(replay(g, Ruleset(1, 3), {}), GameState(g, Ruleset(1, 3)));
  try {
    replay(g, Ruleset(1, 3), std::vector<Move>{{0, 0}, {2, 1}, {1, 1}});
    FAIL() << "expected ReplayError";
  } catch (const ReplayError& e) {
    EXPECT_EQ(e.index(), 2u);
  }
}

TEST(GameProperties, PlayUndoRestoresState) {
  std::mt19937_64 rng(7);
  for (const Graph& g : enumerate_connected_graphs(6)) {
    auto sg = share(g);
    GameState s(sg, Ruleset(2, g.max_degree() + 1));
    std::vector<std::pair<GameState, GameState::Undo>> stack;
    while (!s.is_terminal()) {
      auto moves = s.legal_moves();
      GameState before = s;
      auto u = s.play(moves[rng() % moves.size()]);
      stack.emplace_back(before, u);
    }
    while (!stack.empty()) {
      s.undo(stack.back().second);
      EXPECT_EQ(s, stack.back().first);
      stack.pop_back();
    }
  }
}

TEST(GameProperties, LargePaletteAlwaysCompletes) {
  std::mt19937_64 rng(11);
  for (const Graph& g : enumerate_connected_graphs(6)) {
    auto sg = share(g);
    const int k = trivial_bounds(g).upper;
    for (int m = 1; m <= 3; ++m)
      for (int rep = 0; rep < 5; ++rep) EXPECT_EQ(random_playout(sg, Ruleset(m, k), rng), Status::maker_win);
  }
}

TEST(GameProperties, PaletteBelowMaxDegreeNeverCompletes) {
  std::mt19937_64 rng(13);
  for (const Graph& g : enumerate_trees(7)) {
    if (g.max_degree() < 2) continue;
    auto sg = share(g);
    for (int m = 1; m <= 3; ++m)
      for (int rep = 0; rep < 5; ++rep)
        EXPECT_EQ(random_playout(sg, Ruleset(m, g.max_degree() - 1), rng), Status::breaker_win);
  }
}

TEST(GameProperties, LegalMovesAreAPureFunctionOfState) {
  auto g = share(wheel_graph(5));
  GameState a = replay(g, Ruleset(2, 5), std::vector<Move>{{0, 0}, {6, 1}, {3, 2}});
  GameState b = replay(g, Ruleset(2, 5), std::vector<Move>{{6, 1}, {0, 0}, {3, 2}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.legal_moves(), b.legal_moves());
  for (const Move& mv : a.legal_moves()) EXPECT_TRUE(a.is_legal(mv));
}
