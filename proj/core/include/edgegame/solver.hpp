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
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "edgegame/game.hpp"
#include "edgegame/graph.hpp"

namespace edgegame {

/// Hard limits of the packed key: 4 bits per edge.
inline constexpr int kKeyMaxEdges = 28;
inline constexpr int kKeyMaxColors = 15;

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Packed (relabeled coloring, side to move, Maker sub-moves left).
///
/// Colors are renumbered by first occurrence scanning edges in index order,
/// so positions that differ by a palette permutation share a key.
struct CanonicalKey {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept {
    std::uint64_t h = k.lo * 0x9E3779B97F4A7C15ULL ^ (k.hi + 0x632BE59BD9B4E019ULL);
    h ^= h >> 31;
    h *= 0xBF58476D1CE4E5B9ULL;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

/// Throws CapExceeded beyond kKeyMaxEdges edges or kKeyMaxColors colors.
CanonicalKey canonical_key(const GameState& s);

/// Open-addressing memo of solved positions (value = Maker wins).
class TranspositionTable {
 public:
  explicit TranspositionTable(std::size_t initial_capacity = 1 << 16);

  std::optional<bool> probe(const CanonicalKey& key) const;
  void store(const CanonicalKey& key, bool maker_wins);
  std::size_t size() const { return size_; }
  void clear();

 private:
  struct Slot {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;  // bit 63: occupied, bit 62: value
  };
  static constexpr std::uint64_t kOccupied = std::uint64_t{1} << 63;
  static constexpr std::uint64_t kValue = std::uint64_t{1} << 62;

  std::size_t find_slot(const CanonicalKey& key) const;
  void grow();

  std::vector<Slot> slots_;
  std::size_t size_ = 0;
};

struct SolverOptions {
  int max_edges = 12;
  int max_colors = 8;
  bool cap_override = false;
  /// Abort with CapExceeded once this many nodes were expanded; 0 = no limit.
  std::uint64_t node_budget = 0;
};

struct SolveResult {
  bool maker_wins = false;
  std::uint64_t nodes_expanded = 0;
  std::uint64_t table_hits = 0;
  std::size_t table_size = 0;
  /// First winning sub-move for the side to move, when that side wins.
  std::optional<Move> principal_move;
  double wall_seconds = 0;
};

/// Exact AND/OR search over the (m,1) game with a color-canonical memo.
///
/// Maker sub-moves are separate plies that share the table. Beyond the memo
/// the search uses three value-preserving reductions: unused colors are
/// interchangeable, so only the lowest one is tried; an uncolored edge with
/// no feasible color means Maker has already lost; and when every uncolored
/// edge has more colors than colored-neighbour colors plus uncolored
/// neighbours, nothing can ever block and Maker has won.
class Solver {
 public:
  /// Throws CapExceeded when the instance exceeds the options' caps (unless
  /// overridden) or the key limits, and the palette is below the trivial
  /// upper bound (above it no search is needed).
  Solver(std::shared_ptr<const Graph> graph, Ruleset rules, SolverOptions options = {});
  Solver(const Graph& graph, Ruleset rules, SolverOptions options = {});

  const Graph& graph() const { return *graph_; }
  const Ruleset& rules() const { return rules_; }

  /// Perfect-play winner of `s` (true = Maker).
  bool maker_wins(const GameState& s);
  SolveResult solve();
  SolveResult solve(const GameState& s);

  /// A move preserving the mover's game value; ties broken by legal_moves()
  /// order. Throws IllegalMove on a terminal state.
  Move best_move(const GameState& s);

  std::uint64_t nodes_expanded() const { return nodes_; }
  std::uint64_t table_hits() const { return hits_; }
  std::size_t table_size() const { return table_.size(); }

 private:
  bool search(GameState& s);

  std::shared_ptr<const Graph> graph_;
  Ruleset rules_;
  SolverOptions options_;
  TranspositionTable table_;
  std::uint64_t nodes_ = 0;
  std::uint64_t hits_ = 0;
};

SolveResult maker_wins(const Graph& g, Ruleset rules, SolverOptions options = {});

/// Least k for which Maker wins. Palettes below the maximum degree are
/// rejected without search; every other k up to the trivial upper bound is
/// solved independently (no monotonicity in k is assumed).
int game_chromatic_index(const Graph& g, int m, SolverOptions options = {});

struct WinProfile {
  int m = 1;
  Bounds bounds;
  /// outcomes[k] for k = 0..bounds.upper.
  std::vector<bool> outcomes;
  /// Once Maker wins at some k, Maker wins at every larger k in the profile.
  bool monotone = true;

  /// Least winning k.
  int index() const;
};

/// Solves every k in 0..trivial upper bound.
WinProfile win_profile(const Graph& g, int m, SolverOptions options = {});

Move best_move(const GameState& s, SolverOptions options = {});

struct MonotonicityWitness {
  Graph graph;
  int index_m1 = 0;
  int index_m2 = 0;
};

/// Graphs with index(G, m1) > index(G, m2). Throws std::invalid_argument
/// unless m1 > m2.
std::vector<MonotonicityWitness> scan_monotonicity_counterexamples(
    int m1, int m2, std::span<const Graph> graphs, SolverOptions options = {});

/// The positive integer t with m1 = t*m2 + t - 1, if any. For such pairs
/// index(G, m1) <= index(G, m2) on every graph.
std::optional<int> bias_multiplier(int m1, int m2);

}  // namespace edgegame
