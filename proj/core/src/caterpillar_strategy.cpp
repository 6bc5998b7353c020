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

#include <algorithm>

#include "edgegame/strategy.hpp"

namespace edgegame {

namespace {

SpineDecomposition checked_spine(const Graph& g, const Ruleset& rules) {
  SpineDecomposition sp;
  try {
    sp = spine(g);
  } catch (const GraphError& ex) {
    throw StrategyError(std::string("caterpillar strategy: ") + ex.what());
  }
  const int delta = g.max_degree();
  if (delta < 3) throw StrategyError("caterpillar strategy needs max degree >= 3");
  if (rules.m < 2) throw StrategyError("caterpillar strategy needs m >= 2");
  const int need = std::max(delta, 4);
  if (rules.k < need)
    throw StrategyError("caterpillar strategy needs k >= max(max degree, 4) = " + std::to_string(need));
  return sp;
}

}  // namespace

CaterpillarMakerStrategy::CaterpillarMakerStrategy(std::shared_ptr<const Graph> caterpillar,
                                                   Ruleset rules)
    : graph_(std::move(caterpillar)), rules_(rules), spine_(checked_spine(*graph_, rules_)) {
  is_spine_.assign(graph_->edge_count(), false);
  for (EdgeIndex e : spine_.spine_edges) is_spine_[e] = true;
}

std::unique_ptr<MakerStrategy> CaterpillarMakerStrategy::clone() const {
  return std::make_unique<CaterpillarMakerStrategy>(*this);
}

std::vector<PlannedMove> CaterpillarMakerStrategy::plan_turn(const GameState& s) {
  TurnBuilder turn(s);
  const bool opening = mirror_.empty();
  const auto breaker = opponent_edges(s);

  // A Breaker leg move: first secure the one or two spine edges it touches.
  for (EdgeIndex b : breaker) {
    if (is_spine_[b]) continue;
    for (EdgeIndex f : graph_->adjacent_edges(b))
      if (is_spine_[f]) turn.color_lowest(f, "spine-neighbor-repair");
  }
  // Remaining sub-moves go to the spine in path order; on the opening turn
  // this alternates two colors along the spine.
  for (EdgeIndex e : spine_.spine_edges) {
    if (!turn.open()) break;
    turn.color_lowest(e, opening ? "spine-opening" : "spine-fill");
  }
  // Spine complete: every leg sees at most max degree - 1 colored edges.
  for (EdgeIndex e : spine_.leg_edges) {
    if (!turn.open()) break;
    turn.color_lowest(e, "leg-greedy");
  }
  for (EdgeIndex e = 0; e < graph_->edge_count() && turn.open(); ++e) turn.color_lowest(e, "fallback");

  remember(turn.state());
  return turn.finish();
}

void CaterpillarMakerStrategy::check_invariants(const GameState& s) const {
  for (EdgeIndex e : spine_.spine_edges) {
    if (s.is_colored(e)) continue;
    int spine_colored = 0, legs_colored = 0;
    for (EdgeIndex f : graph_->adjacent_edges(e)) {
      if (!s.is_colored(f)) continue;
      (is_spine_[f] ? spine_colored : legs_colored) += 1;
    }
    if (spine_colored > 2 || legs_colored > 1)
      throw InvariantViolation("uncolored spine edge " + std::to_string(e) + " sees " +
                               std::to_string(spine_colored) + " colored spine edges and " +
                               std::to_string(legs_colored) + " colored legs");
  }
}

}  // namespace edgegame
