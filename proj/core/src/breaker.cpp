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
#include <limits>

#include "edgegame/strategy.hpp"

namespace edgegame {

std::optional<BreakerKind> parse_breaker_kind(std::string_view name) {
  if (name == "random") return BreakerKind::random;
  if (name == "fresh_color_attack" || name == "fresh") return BreakerKind::fresh_color_attack;
  if (name == "lookahead") return BreakerKind::lookahead;
  return std::nullopt;
}

BreakerHeuristic::BreakerHeuristic(BreakerKind kind, std::uint64_t seed, int lookahead_depth)
    : kind_(kind), rng_(seed), depth_(std::max(1, lookahead_depth)) {}

Move BreakerHeuristic::choose(const GameState& s) {
  if (s.is_terminal() || s.side_to_move() != Side::breaker)
    throw IllegalMove("breaker heuristic: not Breaker's move");
  if (!s.has_legal_move()) throw IllegalMove("breaker heuristic: no legal move");
  switch (kind_) {
    case BreakerKind::random:
      return choose_random(s);
    case BreakerKind::fresh_color_attack:
      return choose_fresh_color(s);
    case BreakerKind::lookahead:
      break;
  }
  return choose_lookahead(s);
}

Move BreakerHeuristic::choose_random(const GameState& s) {
  const auto moves = s.legal_moves();
  return moves[rng_() % moves.size()];
}

Move BreakerHeuristic::choose_fresh_color(const GameState& s) {
  const ColorMask fresh = s.rules().palette() & ~s.used_colors();
  if (!fresh) return choose_lookahead(s);
  const Graph& g = s.graph();
  EdgeIndex best = -1;
  int best_open = -1;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (s.is_colored(e)) continue;
    int open = 0;
    for (EdgeIndex f : g.adjacent_edges(e)) open += s.is_colored(f) ? 0 : 1;
    if (open > best_open) {
      best = e;
      best_open = open;
    }
  }
  return {best, lowest_color(fresh)};
}

namespace {

constexpr int kWin = 1'000'000;

// Smaller is better for Breaker: the tightest edge's margin first, then the
// total number of feasible colors left.
int slack(const GameState& s) {
  if (s.status() == Status::breaker_win) return -kWin;
  if (s.status() == Status::maker_win) return kWin;
  const Graph& g = s.graph();
  int tightest = std::numeric_limits<int>::max();
  int total = 0;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (s.is_colored(e)) continue;
    const int free = std::popcount(s.feasible_mask(e));
    int open = 0;
    for (EdgeIndex f : g.adjacent_edges(e)) open += s.is_colored(f) ? 0 : 1;
    tightest = std::min(tightest, free - open);
    total += free;
  }
  return tightest * 1000 + total;
}

int search_slack(GameState& s, int depth) {
  if (depth == 0 || s.is_terminal()) return slack(s);
  const bool breaker = s.side_to_move() == Side::breaker;
  int best = breaker ? std::numeric_limits<int>::max() : std::numeric_limits<int>::min();
  for (const Move& mv : s.legal_moves()) {
    const auto undo = s.play(mv);
    const int v = search_slack(s, depth - 1);
    s.undo(undo);
    best = breaker ? std::min(best, v) : std::max(best, v);
    if (breaker && best == -kWin) break;
  }
  return best;
}

}  // namespace

Move BreakerHeuristic::choose_lookahead(const GameState& s) {
  GameState work = s;
  const auto moves = work.legal_moves();
  Move best = moves.front();
  int best_value = std::numeric_limits<int>::max();
  for (const Move& mv : moves) {
    const auto undo = work.play(mv);
    const int v = search_slack(work, depth_ - 1);
    work.undo(undo);
    if (v < best_value) {
      best = mv;
      best_value = v;
    }
  }
  return best;
}

}  // namespace edgegame
