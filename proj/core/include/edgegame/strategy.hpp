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

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "edgegame/game.hpp"
#include "edgegame/graph.hpp"
#include "edgegame/transcript.hpp"

namespace edgegame {

/// Raised when a strategy is asked to play outside the hypotheses it was
/// built for (wrong graph class, palette or m).
class StrategyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PlannedMove {
  Move move;
  std::string rule;
};

struct TraceEntry {
  int turn = 0;     // 1-based round number; Maker's turn t is followed by Breaker's turn t
  int submove = 0;  // 1-based within the turn
  Side side = Side::maker;
  Move move;
  std::string rule;
};

/// Ordered record of a game played with a scripted strategy.
struct StrategyTrace {
  std::vector<TraceEntry> entries;

  std::vector<Move> moves() const;
  std::vector<TranscriptLine> transcript() const;
  /// Engine transcript format with the rule tag as the line annotation.
  std::string to_text() const;
};

/// A deterministic Maker strategy that plans one whole Maker turn at a time.
///
/// plan_turn() is called at the start of every Maker turn. The strategy
/// finds out what Breaker did by comparing the position with the coloring
/// it left behind at the end of its previous turn.
class MakerStrategy {
 public:
  virtual ~MakerStrategy() = default;

  virtual std::string_view name() const = 0;
  virtual std::vector<PlannedMove> plan_turn(const GameState& s) = 0;
  virtual std::unique_ptr<MakerStrategy> clone() const = 0;

  /// Hash of any memory beyond the current coloring; positions with equal
  /// coloring and fingerprint get identical future play.
  virtual std::uint64_t memory_fingerprint() const { return 0; }

  /// Checked after every completed Maker turn. Throws InvariantViolation.
  virtual void check_invariants(const GameState&) const {}
};

/// Shared helpers for strategies: opponent-move detection and a scratch
/// copy of the position that accumulates the turn being planned.
class ScriptedStrategy : public MakerStrategy {
 protected:
  /// Edges colored since the end of our previous turn, ascending.
  std::vector<EdgeIndex> opponent_edges(const GameState& s) const;

  class TurnBuilder {
   public:
    explicit TurnBuilder(const GameState& s) : state_(s) {}

    bool open() const {
      return state_.status() == Status::ongoing && state_.side_to_move() == Side::maker;
    }
    /// Sub-moves still to place this turn.
    int left() const { return open() ? state_.maker_submoves_left() : 0; }
    const GameState& state() const { return state_; }

    /// Colors `e` with the lowest color in `allowed` that is feasible.
    /// Returns false (and plays nothing) if none is.
    bool color(EdgeIndex e, ColorMask allowed, std::string_view rule);
    bool color_lowest(EdgeIndex e, std::string_view rule) { return color(e, ~ColorMask{0}, rule); }

    std::vector<PlannedMove> finish() { return std::move(moves_); }

   private:
    GameState state_;
    std::vector<PlannedMove> moves_;
  };

  /// Records the coloring at the end of our turn.
  void remember(const GameState& after_turn);

  std::vector<std::int8_t> mirror_;
};

// ---------------------------------------------------------------------------
// Trees

/// The tree oriented away from a root leaf.
struct RootedOrientation {
  Vertex root = 0;                    // u1, a leaf
  EdgeIndex first_arc = 0;            // u1u2
  std::vector<Vertex> parent;         // -1 for the root
  std::vector<EdgeIndex> parent_arc;  // arc into each vertex, -1 for the root
  std::vector<int> depth;
  std::vector<Vertex> head_of;        // per edge: the endpoint farther from the root
  std::vector<int> arc_depth;         // per edge: depth of its head

  Vertex head(EdgeIndex e) const { return head_of[e]; }
  /// Arcs on the directed path from the root to (and including) `e`.
  std::vector<EdgeIndex> path_to(EdgeIndex e) const;
};

/// Roots at the lowest-indexed leaf. Throws NotATree.
RootedOrientation orient_from_lowest_leaf(const Graph& tree);

/// The growing arc set of the tree strategy, plus which of its arcs are
/// colored (a mirror of the game state at the end of Maker's turn).
struct MarkedSubtree {
  std::vector<bool> contains;
  std::vector<bool> colored;

  bool has(EdgeIndex e) const { return contains[e]; }
};

enum class TreeVariant {
  /// Palette >= max degree + 2, any m.
  standard,
  /// Palette >= max degree + 1, needs m >= diameter - 2: colors the whole
  /// root path to Breaker's arc each turn.
  fastfill,
};

struct TreeStrategyOptions {
  TreeVariant variant = TreeVariant::standard;
  /// Mutation switch for testing the referee: leave the join arc uncolored
  /// for the rest of the turn instead of coloring it first.
  bool skip_join_arc = false;
};

class TreeMakerStrategy : public ScriptedStrategy {
 public:
  /// Throws StrategyError if the graph is not a tree or the palette / m
  /// violate the variant's requirements.
  TreeMakerStrategy(std::shared_ptr<const Graph> tree, Ruleset rules, TreeStrategyOptions options = {});

  std::string_view name() const override;
  std::vector<PlannedMove> plan_turn(const GameState& s) override;
  std::unique_ptr<MakerStrategy> clone() const override;
  std::uint64_t memory_fingerprint() const override;
  void check_invariants(const GameState& s) const override;

  const RootedOrientation& orientation() const { return orient_; }
  const MarkedSubtree& subtree() const { return marked_; }

 private:
  void opening_turn(TurnBuilder& turn);
  void standard_turn(TurnBuilder& turn, EdgeIndex breaker_arc);
  void fastfill_turn(TurnBuilder& turn, EdgeIndex breaker_arc);
  void fill_and_extend(TurnBuilder& turn);
  void extend_colored(TurnBuilder& turn);
  std::vector<EdgeIndex> by_depth(std::vector<EdgeIndex> arcs) const;

  std::shared_ptr<const Graph> tree_;
  Ruleset rules_;
  TreeStrategyOptions options_;
  RootedOrientation orient_;
  MarkedSubtree marked_;
  bool started_ = false;
  EdgeIndex held_back_ = -1;
};

// ---------------------------------------------------------------------------
// Caterpillars

class CaterpillarMakerStrategy : public ScriptedStrategy {
 public:
  /// Requires a caterpillar with at least two edges, m >= 2, max degree >= 3,
  /// and a palette of at least max(max degree, 4).
  CaterpillarMakerStrategy(std::shared_ptr<const Graph> caterpillar, Ruleset rules);

  std::string_view name() const override { return "caterpillar"; }
  std::vector<PlannedMove> plan_turn(const GameState& s) override;
  std::unique_ptr<MakerStrategy> clone() const override;
  void check_invariants(const GameState& s) const override;

  const SpineDecomposition& decomposition() const { return spine_; }

 private:
  std::shared_ptr<const Graph> graph_;
  Ruleset rules_;
  SpineDecomposition spine_;
  std::vector<bool> is_spine_;
};

// ---------------------------------------------------------------------------
// Wheels

class WheelMakerStrategy : public ScriptedStrategy {
 public:
  /// Supported: W3 with k = 3; W4 with k = 5 when m = 3 and k = 4 otherwise;
  /// Wn (n >= 5) with k = n. Always m >= 2. Throws StrategyError otherwise.
  WheelMakerStrategy(std::shared_ptr<const Graph> wheel, Ruleset rules);

  std::string_view name() const override { return "wheel"; }
  std::vector<PlannedMove> plan_turn(const GameState& s) override;
  std::unique_ptr<MakerStrategy> clone() const override;
  void check_invariants(const GameState& s) const override;

  const WheelLayout& layout() const { return layout_; }
  /// Rim edge paired with spoke i in the four-color pattern of W4 (and the
  /// mirror pairs of W3): the rim edge across the cycle from spoke i.
  EdgeIndex partner_rim(int spoke) const;

 private:
  void small_wheel_turn(TurnBuilder& turn, const std::vector<EdgeIndex>& breaker);
  void w3_turn(TurnBuilder& turn, const std::vector<EdgeIndex>& breaker);
  void w4_pairs_turn(TurnBuilder& turn, const std::vector<EdgeIndex>& breaker);
  void w4_five_color_turn(TurnBuilder& turn);
  void w4_forced_pattern_turn(TurnBuilder& turn);
  void large_wheel_turn(TurnBuilder& turn);
  void greedy_fill(TurnBuilder& turn, std::string_view rule);

  int spoke_position(EdgeIndex e) const;
  int rim_position(EdgeIndex e) const;

  std::shared_ptr<const Graph> graph_;
  Ruleset rules_;
  WheelLayout layout_;
  int turn_number_ = 0;
};

/// Picks the scripted strategy for `g`: wheel, caterpillar
/// (checked before general trees), or the standard tree strategy. Throws
/// StrategyError listing the supported classes.
std::unique_ptr<MakerStrategy> make_strategy_for(std::shared_ptr<const Graph> g, Ruleset rules);

// ---------------------------------------------------------------------------
// Breaker

enum class BreakerKind { random, fresh_color_attack, lookahead };

std::optional<BreakerKind> parse_breaker_kind(std::string_view name);

class BreakerHeuristic {
 public:
  explicit BreakerHeuristic(BreakerKind kind, std::uint64_t seed = 0, int lookahead_depth = 2);

  BreakerKind kind() const { return kind_; }
  /// Requires Breaker to move with at least one legal move.
  Move choose(const GameState& s);

 private:
  Move choose_random(const GameState& s);
  Move choose_fresh_color(const GameState& s);
  Move choose_lookahead(const GameState& s);

  BreakerKind kind_;
  std::mt19937_64 rng_;
  int depth_;
};

// ---------------------------------------------------------------------------
// Referee

struct RefereeOptions {
  bool check_invariants = true;
  /// Abort with CapExceeded after expanding this many Breaker nodes; 0 = none.
  std::uint64_t node_budget = 200'000'000;
};

struct RefereeResult {
  bool maker_always_wins = false;
  /// On failure: the game line (Maker and Breaker moves) that ends in a
  /// Breaker win.
  std::optional<StrategyTrace> refutation;
  /// The line where Breaker always takes its first legal move.
  StrategyTrace sample;
  std::uint64_t breaker_nodes = 0;
  std::uint64_t memo_hits = 0;
};

/// Walks every Breaker reply against the scripted Maker. Throws
/// StrategyFault when the strategy emits an illegal move or breaks one of
/// its invariants, and CapExceeded when the node budget runs out.
RefereeResult referee_exhaustive(std::shared_ptr<const Graph> g, Ruleset rules,
                                 const MakerStrategy& strategy, RefereeOptions options = {});

class StrategyFault : public std::runtime_error {
 public:
  StrategyFault(const std::string& what, StrategyTrace trace)
      : std::runtime_error(what), trace_(std::move(trace)) {}
  const StrategyTrace& trace() const { return trace_; }

 private:
  StrategyTrace trace_;
};

/// Plays one game of the strategy against a Breaker heuristic.
StrategyTrace play_against(std::shared_ptr<const Graph> g, Ruleset rules, MakerStrategy& maker,
                           BreakerHeuristic& breaker, Status* final_status = nullptr);

}  // namespace edgegame
