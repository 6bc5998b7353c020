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

#include <bit>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgegame/graph.hpp"

namespace edgegame {

using Color = int;
using ColorMask = std::uint64_t;

inline constexpr Color kUncolored = -1;
inline constexpr int kMaxPalette = 64;

enum class Side : std::uint8_t { maker, breaker };
enum class Status : std::uint8_t { ongoing, maker_win, breaker_win };

inline Side opponent(Side s) { return s == Side::maker ? Side::breaker : Side::maker; }
std::string_view to_string(Side s);
std::string_view to_string(Status s);

class RulesError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IllegalMove : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Maker colors `m` edges per turn, Breaker one; colors are 0..k-1.
struct Ruleset {
  int m = 1;
  int k = 0;

  Ruleset() = default;
  /// Throws RulesError unless m >= 1 and 0 <= k <= kMaxPalette.
  Ruleset(int m, int k);

  ColorMask palette() const { return k >= 64 ? ~ColorMask{0} : (ColorMask{1} << k) - 1; }
  friend bool operator==(const Ruleset&, const Ruleset&) = default;
};

struct Move {
  EdgeIndex edge = 0;
  Color color = 0;

  friend auto operator<=>(const Move&, const Move&) = default;
};

/// Lowest color in `mask`, or kUncolored when empty.
inline Color lowest_color(ColorMask mask) {
  return mask ? std::countr_zero(mask) : kUncolored;
}

std::vector<Color> colors_in(ColorMask mask);

/// Position of the (m,1) edge coloring game.
///
/// The coloring is always proper. Maker moves first and must spend exactly
/// min(m, uncolored) sub-moves per turn; nobody may pass. Whenever the side
/// to move has no legal move while edges remain uncolored (including in the
/// middle of a Maker turn) the game is a Breaker win; coloring the last edge
/// is a Maker win.
class GameState {
 public:
  GameState(std::shared_ptr<const Graph> graph, Ruleset rules);

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
  const Ruleset& rules() const { return rules_; }

  Color color_of(EdgeIndex e) const { return colors_[e]; }
  bool is_colored(EdgeIndex e) const { return colors_[e] != kUncolored; }
  std::span<const std::int8_t> colors() const { return colors_; }

  Side side_to_move() const { return side_; }
  int maker_submoves_left() const { return submoves_left_; }
  Status status() const { return status_; }
  bool is_terminal() const { return status_ != Status::ongoing; }

  int colored_count() const { return colored_; }
  int uncolored_count() const { return graph_->edge_count() - colored_; }
  /// Number of moves played so far; equals colored_count().
  int ply() const { return colored_; }

  /// Colors on edges adjacent to `e`.
  ColorMask blocked_mask(EdgeIndex e) const;
  /// Palette colors not on any edge adjacent to `e` (ignores whether `e`
  /// itself is colored).
  ColorMask feasible_mask(EdgeIndex e) const { return rules_.palette() & ~blocked_mask(e); }
  /// Throws IllegalMove if `e` is already colored.
  std::vector<Color> feasible_colors(EdgeIndex e) const;
  /// Colors appearing anywhere on the graph.
  ColorMask used_colors() const;

  bool is_legal(const Move& mv) const;
  /// All (edge, color) pairs in (edge, color) order; empty when terminal.
  std::vector<Move> legal_moves() const;
  bool has_legal_move() const;

  struct Undo {
    EdgeIndex edge;
    Side side;
    int submoves_left;
    Status status;
  };

  /// In-place move with exact undo. Assumes `mv` is legal (checked in debug
  /// builds only); use apply() for validated play.
  Undo play(const Move& mv);
  void undo(const Undo& u);

  /// Validates, then plays. Throws IllegalMove.
  void apply(const Move& mv);

  /// Every pair of adjacent colored edges differs.
  bool coloring_is_proper() const;

  friend bool operator==(const GameState& a, const GameState& b) {
    return a.graph_ == b.graph_ && a.rules_ == b.rules_ && a.colors_ == b.colors_ &&
           a.side_ == b.side_ && a.submoves_left_ == b.submoves_left_ && a.status_ == b.status_;
  }

 private:
  void settle_after_move(Side mover);

  std::shared_ptr<const Graph> graph_;
  Ruleset rules_;
  std::vector<std::int8_t> colors_;
  int colored_ = 0;
  Side side_ = Side::maker;
  int submoves_left_ = 0;
  Status status_ = Status::ongoing;
};

GameState new_game(std::shared_ptr<const Graph> graph, Ruleset rules);
GameState new_game(const Graph& graph, Ruleset rules);

/// Value-semantics move: returns the successor. Throws IllegalMove.
GameState apply_move(const GameState& s, const Move& mv);

class ReplayError : public IllegalMove {
 public:
  ReplayError(std::size_t index, const std::string& what)
      : IllegalMove("move " + std::to_string(index) + ": " + what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Folds apply_move over `moves`. Throws ReplayError naming the first
/// illegal move's index (0-based).
GameState replay(std::shared_ptr<const Graph> graph, Ruleset rules, std::span<const Move> moves);

}  // namespace edgegame
