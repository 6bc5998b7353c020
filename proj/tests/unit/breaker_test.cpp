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

#include "edgegame/generators.hpp"
#include "edgegame/strategy.hpp"

using namespace edgegame;

namespace {

std::shared_ptr<const Graph> share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

}  // namespace

TEST(BreakerKind, Parse) {
  EXPECT_EQ(parse_breaker_kind("random"), BreakerKind::random);
  EXPECT_EQ(parse_breaker_kind("fresh_color_attack"), BreakerKind::fresh_color_attack);
  EXPECT_EQ(parse_breaker_kind("lookahead"), BreakerKind::lookahead);
  EXPECT_FALSE(parse_breaker_kind("oracle").has_value());
}

TEST(FreshColorAttack, FourthColorOnTheOpenRim) {
  // W4, m = 3, k = 4: Maker put three distinct colors on s1, s2, s3.
  auto w4 = share(wheel_graph(4));
  GameState s = replay(w4, Ruleset(3, 4), std::vector<Move>{{0, 0}, {1, 1}, {2, 2}});
  ASSERT_EQ(s.side_to_move(), Side::breaker);
  BreakerHeuristic fresh(BreakerKind::fresh_color_attack);
  const Move mv = fresh.choose(s);
  EXPECT_EQ(mv.color, 3);
  // A rim edge at the rim end of s4 (lowest index among the busiest edges),
  // after which s4 sees all four colors.
  EXPECT_EQ(mv.edge, *w4->find_edge(3, 4));
  EXPECT_TRUE(apply_move(s, mv).feasible_colors(3).empty());
}

TEST(FreshColorAttack, FallsBackToLookaheadWhenNoColorIsFresh) {
  auto p6 = share(path_graph(6));
  GameState s = replay(p6, Ruleset(2, 2), std::vector<Move>{{0, 0}, {1, 1}});
  ASSERT_EQ(s.side_to_move(), Side::breaker);
  ASSERT_EQ(s.used_colors(), s.rules().palette());
  BreakerHeuristic fresh(BreakerKind::fresh_color_attack);
  BreakerHeuristic look(BreakerKind::lookahead);
  EXPECT_EQ(fresh.choose(s), look.choose(s));
}

TEST(RandomBreaker, SeededAndReproducible) {
  auto w5 = share(wheel_graph(5));
  GameState s = replay(w5, Ruleset(1, 7), std::vector<Move>{{0, 0}});
  std::vector<Move> a, b;
  BreakerHeuristic r1(BreakerKind::random, 42), r2(BreakerKind::random, 42);
  for (int i = 0; i < 20; ++i) {
    a.push_back(r1.choose(s));
    b.push_back(r2.choose(s));
    EXPECT_TRUE(s.is_legal(a.back()));
  }
  EXPECT_EQ(a, b);
}

TEST(Breaker, RequiresBreakerToMove) {
  GameState s(share(path_graph(4)), Ruleset(1, 3));
  BreakerHeuristic look(BreakerKind::lookahead);
  EXPECT_THROW(look.choose(s), IllegalMove);
}

TEST(Breaker, PlayAgainstIsDeterministic) {
  auto w5 = share(wheel_graph(5));
  const Ruleset rules(2, 5);
  for (auto kind : {BreakerKind::random, BreakerKind::fresh_color_attack, BreakerKind::lookahead}) {
    WheelMakerStrategy m1(w5, rules), m2(w5, rules);
    BreakerHeuristic b1(kind, 3), b2(kind, 3);
    Status s1, s2;
    auto t1 = play_against(w5, rules, m1, b1, &s1);
    auto t2 = play_against(w5, rules, m2, b2, &s2);
    EXPECT_EQ(t1.to_text(), t2.to_text());
    EXPECT_EQ(s1, Status::maker_win);
    EXPECT_EQ(s2, Status::maker_win);
  }
}
