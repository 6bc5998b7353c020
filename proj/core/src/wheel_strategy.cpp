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
#include <array>

#include "edgegame/strategy.hpp"

namespace edgegame {

namespace {

constexpr ColorMask bit(Color c) { return ColorMask{1} << c; }

WheelLayout checked_layout(const Graph& g, const Ruleset& rules) {
  WheelLayout layout;
  try {
    layout = wheel_layout(g);
  } catch (const NotAWheel&) {
    throw StrategyError("wheel strategy needs a wheel");
  }
  const int n = layout.size();
  if (rules.m < 2) throw StrategyError("wheel strategy needs m >= 2");
  int want = n;
  if (n == 4) want = rules.m == 3 ? 5 : 4;
  if (rules.k != want)
    throw StrategyError("wheel strategy for W" + std::to_string(n) + " with m=" +
                        std::to_string(rules.m) + " plays with exactly k=" + std::to_string(want));
  return layout;
}

// W4, m = 2. Opening: spoke 0 and its partner rim (rim 1) get color A.
// Breaker must answer with a new color B on one of the six other edges; the
// two-move reply puts the two lowest unused colors C, D on the listed edges,
// after which every remaining edge has exactly one feasible color.
struct W4Reply {
  bool breaker_on_spoke;
  int breaker_pos;
  bool c_on_spoke;
  int c_pos;
  bool d_on_spoke;
  int d_pos;
};

constexpr std::array<W4Reply, 6> kW4Replies{{
    {true, 1, true, 3, false, 3},
    {true, 2, false, 0, false, 2},
    {true, 3, true, 1, false, 3},
    {false, 0, true, 2, false, 2},
    {false, 2, true, 2, false, 0},
    {false, 3, true, 1, true, 3},
}};

}  // namespace

WheelMakerStrategy::WheelMakerStrategy(std::shared_ptr<const Graph> wheel, Ruleset rules)
    : graph_(std::move(wheel)), rules_(rules), layout_(checked_layout(*graph_, rules_)) {}

std::unique_ptr<MakerStrategy> WheelMakerStrategy::clone() const {
  return std::make_unique<WheelMakerStrategy>(*this);
}

EdgeIndex WheelMakerStrategy::partner_rim(int spoke) const {
  return layout_.rim[(spoke + 1) % layout_.size()];
}

int WheelMakerStrategy::spoke_position(EdgeIndex e) const {
  auto it = std::find(layout_.spokes.begin(), layout_.spokes.end(), e);
  return it == layout_.spokes.end() ? -1 : static_cast<int>(it - layout_.spokes.begin());
}

int WheelMakerStrategy::rim_position(EdgeIndex e) const {
  auto it = std::find(layout_.rim.begin(), layout_.rim.end(), e);
  return it == layout_.rim.end() ? -1 : static_cast<int>(it - layout_.rim.begin());
}

void WheelMakerStrategy::greedy_fill(TurnBuilder& turn, std::string_view rule) {
  for (EdgeIndex e = 0; e < graph_->edge_count() && turn.open(); ++e) turn.color_lowest(e, rule);
}

std::vector<PlannedMove> WheelMakerStrategy::plan_turn(const GameState& s) {
  TurnBuilder turn(s);
  const auto breaker = opponent_edges(s);
  ++turn_number_;
  if (layout_.size() <= 4) {
    small_wheel_turn(turn, breaker);
  } else {
    large_wheel_turn(turn);
  }
  greedy_fill(turn, "fallback");
  remember(turn.state());
  return turn.finish();
}

void WheelMakerStrategy::small_wheel_turn(TurnBuilder& turn, const std::vector<EdgeIndex>& breaker) {
  if (layout_.size() == 3) {
    w3_turn(turn, breaker);
  } else if (rules_.m == 3) {
    w4_five_color_turn(turn);
  } else if (rules_.m >= 5) {
    w4_forced_pattern_turn(turn);
  } else {
    w4_pairs_turn(turn, breaker);
  }
}

void WheelMakerStrategy::w3_turn(TurnBuilder& turn, const std::vector<EdgeIndex>& breaker) {
  if (rules_.m >= 3) {
    // Three distinct spoke colors leave one feasible color per rim edge.
    if (turn_number_ == 1)
      for (EdgeIndex sp : layout_.spokes) turn.color_lowest(sp, "spokes-distinct");
    greedy_fill(turn, "rim-forced");
    return;
  }
  if (turn_number_ == 1) {
    turn.color(layout_.spokes[0], bit(0), "pair-opening");
    turn.color(partner_rim(0), bit(0), "pair-opening");
    return;
  }
  // Copy Breaker's color onto the other edge of its pair.
  for (EdgeIndex b : breaker) {
    const Color c = turn.state().color_of(b);
    if (int j = spoke_position(b); j >= 0) {
      turn.color(partner_rim(j), bit(c), "pair-mirror");
    } else if (int r = rim_position(b); r >= 0) {
      turn.color(layout_.spokes[(r + layout_.size() - 1) % layout_.size()], bit(c), "pair-mirror");
    }
  }
  greedy_fill(turn, "pair-complete");
}

void WheelMakerStrategy::w4_pairs_turn(TurnBuilder& turn, const std::vector<EdgeIndex>& breaker) {
  const int n = layout_.size();
  auto spoke_of_rim = [&](int r) { return layout_.spokes[(r + n - 1) % n]; };
  if (turn_number_ == 1) {
    // Two colors per pair: m = 2 opens one pair, m = 4 two pairs.
    for (int j = 0; j < rules_.m / 2; ++j) {
      turn.color(layout_.spokes[j], bit(j), "pair-opening");
      turn.color(partner_rim(j), bit(j), "pair-opening");
    }
    return;
  }
  if (turn_number_ == 2 && rules_.m == 2 && breaker.size() == 1) {
    const EdgeIndex b = breaker.front();
    const int sp = spoke_position(b);
    const bool on_spoke = sp >= 0;
    const int pos = on_spoke ? sp : rim_position(b);
    const ColorMask unused = rules_.palette() & ~turn.state().used_colors();
    const Color c = lowest_color(unused);
    const Color d = lowest_color(unused & ~bit(c));
    for (const W4Reply& reply : kW4Replies) {
      if (reply.breaker_on_spoke != on_spoke || reply.breaker_pos != pos) continue;
      const EdgeIndex ce = reply.c_on_spoke ? layout_.spokes[reply.c_pos] : layout_.rim[reply.c_pos];
      const EdgeIndex de = reply.d_on_spoke ? layout_.spokes[reply.d_pos] : layout_.rim[reply.d_pos];
      turn.color(ce, bit(c), "w4-response-table");
      turn.color(de, bit(d), "w4-response-table");
    }
  } else if (turn_number_ == 2) {
    // m = 4: Breaker had to open a third pair with a new color; copy it.
    for (EdgeIndex b : breaker) {
      const Color c = turn.state().color_of(b);
      if (int j = spoke_position(b); j >= 0) {
        turn.color(partner_rim(j), bit(c), "pair-mirror");
      } else if (int r = rim_position(b); r >= 0) {
        turn.color(spoke_of_rim(r), bit(c), "pair-mirror");
      }
    }
  }
  greedy_fill(turn, "forced-color");
}

void WheelMakerStrategy::w4_five_color_turn(TurnBuilder& turn) {
  if (turn_number_ == 1) {
    for (int j = 0; j < 3; ++j) turn.color_lowest(layout_.spokes[j], "spokes-distinct");
  }
  // With four distinct spoke colors every rim edge sees four colors out of five.
  turn.color_lowest(layout_.spokes[3], "last-spoke");
  greedy_fill(turn, "rim-fill");
}

void WheelMakerStrategy::w4_forced_pattern_turn(TurnBuilder& turn) {
  if (turn_number_ == 1) {
    turn.color(layout_.spokes[0], bit(0), "forced-pattern");
    turn.color(partner_rim(0), bit(0), "forced-pattern");
    turn.color(layout_.spokes[1], bit(1), "forced-pattern");
    turn.color(partner_rim(2), bit(2), "forced-pattern");
    turn.color(layout_.spokes[3], bit(3), "forced-pattern");
  }
  greedy_fill(turn, "forced-color");
}

void WheelMakerStrategy::large_wheel_turn(TurnBuilder& turn) {
  const int n = layout_.size();
  auto adjacent_spokes = [n](int a, int b) { return (a + 1) % n == b || (b + 1) % n == a; };
  // Number of adjacent pairs among `u` after removing position `skip`.
  auto adjacent_pairs_without = [&](const std::vector<int>& u, int skip) {
    int pairs = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = i + 1; j < u.size(); ++j)
        if (u[i] != skip && u[j] != skip && adjacent_spokes(u[i], u[j])) ++pairs;
    return pairs;
  };

  while (turn.open()) {
    const GameState& st = turn.state();
    std::vector<int> uncolored;
    ColorMask spoke_colors = 0;
    for (int i = 0; i < n; ++i) {
      const EdgeIndex sp = layout_.spokes[i];
      if (st.is_colored(sp)) {
        spoke_colors |= bit(st.color_of(sp));
      } else {
        uncolored.push_back(i);
      }
    }
    const ColorMask used = st.used_colors();
    const ColorMask orphans = used & ~spoke_colors;
    const int u = static_cast<int>(uncolored.size());
    const int left = turn.left();

    if (u == 0) {
      // Every rim edge touches four edges and there are n >= 5 colors.
      greedy_fill(turn, "rim-fill");
      return;
    }

    if (orphans) {
      // Breaker put a color on the rim that no spoke has: copy it onto a
      // spoke the rim edge does not touch, keeping the rest split if we can.
      const Color o = lowest_color(orphans);
      int best = -1, best_pairs = 0;
      for (int i : uncolored) {
        if (!(st.feasible_mask(layout_.spokes[i]) & bit(o))) continue;
        const int pairs = adjacent_pairs_without(uncolored, i);
        if (best < 0 || pairs < best_pairs) {
          best = i;
          best_pairs = pairs;
        }
      }
      if (best < 0 || !turn.color(layout_.spokes[best], bit(o), "spoke-mirror")) return;
      continue;
    }

    const ColorMask fresh = rules_.palette() & ~used;
    if (u > 3 || left >= u) {
      const char* rule = u > 3 ? "spoke-fresh" : "spoke-finish";
      if (!turn.color(layout_.spokes[uncolored.front()], fresh, rule)) return;
      continue;
    }

    if (u == 3) {
      // One spoke now, leaving two that are not next to each other.
      int pick = uncolored.front();
      for (int i : uncolored) {
        if (adjacent_pairs_without(uncolored, i) == 0) {
          pick = i;
          break;
        }
      }
      if (!turn.color(layout_.spokes[pick], fresh, "spoke-split")) return;
      continue;
    }

    // u == 2 with a single sub-move left: spend it on a rim edge with a
    // color that is already on a spoke.
    bool placed = false;
    for (EdgeIndex r : layout_.rim) {
      if (st.is_colored(r) || !(st.feasible_mask(r) & spoke_colors)) continue;
      placed = turn.color(r, spoke_colors, "rim-filler");
      break;
    }
    if (!placed) return;
  }
}

void WheelMakerStrategy::check_invariants(const GameState& s) const {
  const int n = layout_.size();
  if (n < 5) return;
  int colored_spokes = 0;
  for (EdgeIndex sp : layout_.spokes) colored_spokes += s.is_colored(sp) ? 1 : 0;
  if (colored_spokes >= n - 3) return;
  const int used = std::popcount(s.used_colors());
  if (used != colored_spokes)
    throw InvariantViolation(std::to_string(colored_spokes) + " spokes colored but " +
                             std::to_string(used) + " colors in use");
}

}  // namespace edgegame
