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

#include "edgegame/strategy.hpp"

#include <exception>

namespace edgegame {

std::vector<Move> StrategyTrace::moves() const {
  std::vector<Move> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.move);
  return out;
}

std::vector<TranscriptLine> StrategyTrace::transcript() const {
  std::vector<TranscriptLine> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back({e.side, e.move, e.rule});
  return out;
}

std::string StrategyTrace::to_text() const { return format_transcript(transcript()); }

std::vector<EdgeIndex> ScriptedStrategy::opponent_edges(const GameState& s) const {
  std::vector<EdgeIndex> out;
  for (EdgeIndex e = 0; e < s.graph().edge_count(); ++e) {
    const bool before = !mirror_.empty() && mirror_[e] != kUncolored;
    if (s.is_colored(e) && !before) out.push_back(e);
  }
  return out;
}

void ScriptedStrategy::remember(const GameState& after_turn) {
  mirror_.assign(after_turn.colors().begin(), after_turn.colors().end());
}

bool ScriptedStrategy::TurnBuilder::color(EdgeIndex e, ColorMask allowed, std::string_view rule) {
  if (!open() || state_.is_colored(e)) return false;
  const Color c = lowest_color(state_.feasible_mask(e) & allowed);
  if (c == kUncolored) return false;
  state_.play({e, c});
  moves_.push_back({{e, c}, std::string(rule)});
  return true;
}

std::unique_ptr<MakerStrategy> make_strategy_for(std::shared_ptr<const Graph> g, Ruleset rules) {
  std::string reasons;
  try {
    wheel_layout(*g);
    return std::make_unique<WheelMakerStrategy>(g, rules);
  } catch (const NotAWheel&) {
  } catch (const StrategyError& ex) {
    reasons += std::string("wheel: ") + ex.what() + "; ";
  }
  if (g->is_tree()) {
    try {
      return std::make_unique<CaterpillarMakerStrategy>(g, rules);
    } catch (const StrategyError& ex) {
      reasons += std::string("caterpillar: ") + ex.what() + "; ";
    }
    try {
      return std::make_unique<TreeMakerStrategy>(g, rules);
    } catch (const StrategyError& ex) {
      reasons += std::string("tree: ") + ex.what() + "; ";
    }
  }
  throw StrategyError(
      "no scripted strategy applies (supported: wheels W3/W4/Wn with their index palette and "
      "m>=2, caterpillars with m>=2 and k>=max(deg,4), trees with k>=deg+2)" +
      (reasons.empty() ? std::string() : ": " + reasons));
}

}  // namespace edgegame
