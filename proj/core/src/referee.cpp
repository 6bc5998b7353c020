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

#include <string>
#include <unordered_set>

#include "edgegame/solver.hpp"
#include "edgegame/strategy.hpp"

namespace edgegame {

namespace {

// Plays one whole Maker turn from `strategy` into `s`, appending to `trace`.
void play_maker_turn(GameState& s, MakerStrategy& strategy, StrategyTrace& trace, int turn,
                     bool check) {
  const auto plan = strategy.plan_turn(s);
  int sub = 0;
  for (const PlannedMove& pm : plan) {
    if (s.is_terminal() || s.side_to_move() != Side::maker)
      throw StrategyFault(std::string(strategy.name()) + " planned more moves than its turn allows",
                          trace);
    if (!s.is_legal(pm.move))
      throw StrategyFault(std::string(strategy.name()) + " planned illegal move edge " +
                              std::to_string(pm.move.edge) + " color " +
                              std::to_string(pm.move.color) + " (" + pm.rule + ")",
                          trace);
    s.play(pm.move);
    trace.entries.push_back({turn, ++sub, Side::maker, pm.move, pm.rule});
  }
  if (!s.is_terminal() && s.side_to_move() == Side::maker)
    throw StrategyFault(std::string(strategy.name()) + " left its turn unfinished", trace);
  if (check && !s.is_terminal()) {
    try {
      strategy.check_invariants(s);
    } catch (const InvariantViolation& ex) {
      throw StrategyFault(std::string(strategy.name()) + ": " + ex.what(), trace);
    }
  }
}

class Walker {
 public:
  Walker(const RefereeOptions& options, RefereeResult& result)
      : options_(options), result_(result) {}

  // Maker is to move in `s`; true if Maker wins against every Breaker line.
  bool maker_node(GameState s, MakerStrategy& strategy, int turn) {
    const std::size_t mark = trace_.entries.size();
    play_maker_turn(s, strategy, trace_, turn, options_.check_invariants);
    const bool value = breaker_node(s, strategy, turn);
    if (value) trace_.entries.resize(mark);
    return value;
  }

 private:
  bool breaker_node(const GameState& s, const MakerStrategy& strategy, int turn) {
    if (s.status() == Status::maker_win) return true;
    if (s.status() == Status::breaker_win) {
      result_.refutation = trace_;
      return false;
    }
    ++result_.breaker_nodes;
    if (options_.node_budget && result_.breaker_nodes > options_.node_budget)
      throw CapExceeded("referee: node budget of " + std::to_string(options_.node_budget) +
                        " exhausted");
    std::string key(s.colors().begin(), s.colors().end());
    const std::uint64_t fp = strategy.memory_fingerprint();
    key.append(reinterpret_cast<const char*>(&fp), sizeof fp);
    if (won_.contains(key)) {
      ++result_.memo_hits;
      return true;
    }
    for (const Move& mv : s.legal_moves()) {
      GameState next = s;
      next.play(mv);
      trace_.entries.push_back({turn, 1, Side::breaker, mv, ""});
      bool value;
      if (next.is_terminal()) {
        value = next.status() == Status::maker_win;
        if (!value) result_.refutation = trace_;
      } else {
        auto branch = strategy.clone();
        value = maker_node(next, *branch, turn + 1);
      }
      if (!value) return false;
      trace_.entries.pop_back();
    }
    won_.insert(std::move(key));
    return true;
  }

  const RefereeOptions& options_;
  RefereeResult& result_;
  StrategyTrace trace_;
  std::unordered_set<std::string> won_;
};

StrategyTrace first_move_line(std::shared_ptr<const Graph> g, Ruleset rules,
                              const MakerStrategy& strategy, bool check) {
  GameState s(std::move(g), rules);
  auto maker = strategy.clone();
  StrategyTrace trace;
  for (int turn = 1; !s.is_terminal(); ++turn) {
    play_maker_turn(s, *maker, trace, turn, check);
    if (s.is_terminal()) break;
    const Move mv = s.legal_moves().front();
    s.play(mv);
    trace.entries.push_back({turn, 1, Side::breaker, mv, ""});
  }
  return trace;
}

}  // namespace

RefereeResult referee_exhaustive(std::shared_ptr<const Graph> g, Ruleset rules,
                                 const MakerStrategy& strategy, RefereeOptions options) {
  RefereeResult result;
  GameState start(g, rules);
  if (start.is_terminal()) {
    result.maker_always_wins = start.status() == Status::maker_win;
    return result;
  }
  Walker walker(options, result);
  auto root = strategy.clone();
  result.maker_always_wins = walker.maker_node(start, *root, 1);
  if (result.maker_always_wins) result.refutation.reset();
  result.sample = first_move_line(g, rules, strategy, options.check_invariants);
  return result;
}

StrategyTrace play_against(std::shared_ptr<const Graph> g, Ruleset rules, MakerStrategy& maker,
                           BreakerHeuristic& breaker, Status* final_status) {
  GameState s(std::move(g), rules);
  StrategyTrace trace;
  for (int turn = 1; !s.is_terminal(); ++turn) {
    play_maker_turn(s, maker, trace, turn, true);
    if (s.is_terminal()) break;
    const Move mv = breaker.choose(s);
    s.apply(mv);
    trace.entries.push_back({turn, 1, Side::breaker, mv, ""});
  }
  if (final_status) *final_status = s.status();
  return trace;
}

}  // namespace edgegame
