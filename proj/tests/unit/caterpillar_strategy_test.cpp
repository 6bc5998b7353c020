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

#include <set>

#include "edgegame/enumerate.hpp"
#include "edgegame/generators.hpp"
#include "edgegame/strategy.hpp"

using namespace edgegame;

namespace {

std::shared_ptr<const Graph> share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

}  // namespace

TEST(CaterpillarStrategy, RefereeExamples) {
  auto cat = share(caterpillar_graph(std::vector<int>{3, 0, 3}));
  CaterpillarMakerStrategy a(cat, Ruleset(2, 4));
  EXPECT_TRUE(referee_exhaustive(cat, Ruleset(2, 4), a).maker_always_wins);

  auto delta3 = share(caterpillar_graph(std::vector<int>{2, 1, 1, 2}));
  ASSERT_EQ(delta3->max_degree(), 3);
  CaterpillarMakerStrategy b(delta3, Ruleset(2, 4));
  EXPECT_TRUE(referee_exhaustive(delta3, Ruleset(2, 4), b).maker_always_wins);
}

TEST(CaterpillarStrategy, ShortSpineIsColoredOnTurnOne) {
  auto cat = share(caterpillar_graph(std::vector<int>{3, 1, 3}));  // two spine edges
  const Ruleset rules(2, 4);
  CaterpillarMakerStrategy strat(cat, rules);
  auto turn = strat.plan_turn(GameState(cat, rules));
  std::set<EdgeIndex> edges;
  std::set<Color> colors;
  for (const auto& p : turn) {
    edges.insert(p.move.edge);
    colors.insert(p.move.color);
  }
  for (EdgeIndex e : strat.decomposition().spine_edges) EXPECT_TRUE(edges.count(e));
  EXPECT_EQ(colors.size(), 2u);
}

TEST(CaterpillarStrategy, Preconditions) {
  auto cat = share(caterpillar_graph(std::vector<int>{3, 0, 3}));
  EXPECT_THROW(CaterpillarMakerStrategy(cat, Ruleset(1, 4)), StrategyError);
  EXPECT_THROW(CaterpillarMakerStrategy(cat, Ruleset(2, 3)), StrategyError);
  auto spider = share(Graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}));
  EXPECT_THROW(CaterpillarMakerStrategy(spider, Ruleset(2, 4)), StrategyError);
  EXPECT_THROW(CaterpillarMakerStrategy(share(path_graph(5)), Ruleset(2, 4)), StrategyError);
}

TEST(CaterpillarStrategy, RefereeOnAllLargeDegreeCaterpillars) {
  int runs = 0;
  for (const Graph& t : enumerate_trees(9)) {
    if (t.max_degree() < 4 || t.edge_count() < 2) continue;
    try {
      spine(t);
    } catch (const NotACaterpillar&) {
      continue;
    }
    auto g = share(t);
    for (int m = 2; m <= 3; ++m) {
      const Ruleset rules(m, t.max_degree());
      CaterpillarMakerStrategy strat(g, rules);
      EXPECT_TRUE(referee_exhaustive(g, rules, strat).maker_always_wins)
          << tree_canonical_form(t) << " m=" << m;
      ++runs;
    }
  }
  EXPECT_GT(runs, 50);
}
