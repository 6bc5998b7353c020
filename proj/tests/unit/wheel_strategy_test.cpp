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
#include "edgegame/solver.hpp"
#include "edgegame/strategy.hpp"

using namespace edgegame;

namespace {

std::shared_ptr<const Graph> share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

bool referee_wheel(int n, int m, int k) {
  auto g = share(wheel_graph(n));
  WheelMakerStrategy strat(g, Ruleset(m, k));
  return referee_exhaustive(g, Ruleset(m, k), strat).maker_always_wins;
}

}  // namespace

TEST(WheelStrategy, RefereeExamples) {
  EXPECT_TRUE(referee_wheel(3, 2, 3));
  EXPECT_TRUE(referee_wheel(4, 3, 5));
  EXPECT_TRUE(referee_wheel(6, 2, 6));
}

TEST(WheelStrategy, RefereeAcrossSupportedInstances) {
  for (int m = 2; m <= 5; ++m) {
    EXPECT_TRUE(referee_wheel(3, m, 3)) << "W3 m=" << m;
    EXPECT_TRUE(referee_wheel(4, m, m == 3 ? 5 : 4)) << "W4 m=" << m;
    EXPECT_TRUE(referee_wheel(5, m, 5)) << "W5 m=" << m;
  }
  EXPECT_TRUE(referee_wheel(6, 3, 6));
}

TEST(WheelStrategy, AgreesWithSolverWhereBothRun) {
  for (int n = 3; n <= 5; ++n) {
    for (int m = 2; m <= 4; ++m) {
      const int k = n == 3 ? 3 : (n == 4 ? (m == 3 ? 5 : 4) : n);
      ASSERT_TRUE(referee_wheel(n, m, k));
      EXPECT_TRUE(maker_wins(wheel_graph(n), Ruleset(m, k)).maker_wins) << "W" << n << " m=" << m;
    }
  }
}

TEST(WheelStrategy, Preconditions) {
  auto w5 = share(wheel_graph(5));
  EXPECT_THROW(WheelMakerStrategy(w5, Ruleset(1, 5)), StrategyError);
  EXPECT_THROW(WheelMakerStrategy(w5, Ruleset(2, 6)), StrategyError);
  EXPECT_THROW(WheelMakerStrategy(share(wheel_graph(4)), Ruleset(3, 4)), StrategyError);
  EXPECT_THROW(WheelMakerStrategy(share(cycle_graph(5)), Ruleset(2, 5)), StrategyError);
}

TEST(WheelStrategy, PartnerRimIsOppositeTheSpoke) {
  auto w4 = share(wheel_graph(4));
  WheelMakerStrategy strat(w4, Ruleset(2, 4));
  for (int i = 0; i < 4; ++i) {
    const EdgeIndex r = strat.partner_rim(i);
    EXPECT_FALSE(w4->edges_adjacent(r, strat.layout().spokes[i]));
  }
}

TEST(MakeStrategyFor, DispatchesByGraphClass) {
  EXPECT_EQ(make_strategy_for(share(wheel_graph(5)), Ruleset(2, 5))->name(), "wheel");
  EXPECT_EQ(make_strategy_for(share(caterpillar_graph(std::vector<int>{3, 0, 3})), Ruleset(2, 4))->name(),
            "caterpillar");
  auto spider = share(Graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}));
  EXPECT_EQ(make_strategy_for(spider, Ruleset(1, 5))->name(), "tree");
  try {
    make_strategy_for(share(cycle_graph(5)), Ruleset(2, 3));
    FAIL();
  } catch (const StrategyError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("wheel"), std::string::npos);
    EXPECT_NE(what.find("caterpillar"), std::string::npos);
    EXPECT_NE(what.find("tree"), std::string::npos);
  }
}
