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

#include "edgegame/solver.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <string>

namespace edgegame {

CanonicalKey canonical_key(const GameState& s) {
  const int edges = s.graph().edge_count();
  if (edges > kKeyMaxEdges)
    throw CapExceeded("canonical_key: more than " + std::to_string(kKeyMaxEdges) + " edges");
  std::array<std::int8_t, kMaxPalette> relabel;
  relabel.fill(0);
  std::uint64_t next = 1;
  CanonicalKey key;
  const auto colors = s.colors();
  for (int e = 0; e < edges; ++e) {
    std::uint64_t nibble = 0;
    if (const int c = colors[e]; c != kUncolored) {
      if (relabel[c] == 0) {
        if (next > kKeyMaxColors)
          throw CapExceeded("canonical_key: more than " + std::to_string(kKeyMaxColors) +
                            " distinct colors");
        relabel[c] = static_cast<std::int8_t>(next++);
      }
      nibble = static_cast<std::uint64_t>(relabel[c]);
    }
    if (e < 16) {
      key.lo |= nibble << (4 * e);
    } else {
      key.hi |= nibble << (4 * (e - 16));
    }
  }
  key.hi |= std::uint64_t{s.side_to_move() == Side::breaker} << 48;
  key.hi |= static_cast<std::uint64_t>(s.maker_submoves_left() & 0x3F) << 49;
  return key;
}

// ---------------------------------------------------------------------------

TranspositionTable::TranspositionTable(std::size_t initial_capacity) {
  std::size_t cap = 16;
  while (cap < initial_capacity) cap <<= 1;
  slots_.resize(cap);
}

std::size_t TranspositionTable::find_slot(const CanonicalKey& key) const {
  const std::size_t mask = slots_.size() - 1;
  std::size_t i = CanonicalKeyHash{}(key) & mask;
  const std::uint64_t tagged = key.hi | kOccupied;
  while (true) {
    const Slot& s = slots_[i];
    if (!(s.hi & kOccupied)) return i;
    if (s.lo == key.lo && (s.hi & ~kValue) == tagged) return i;
    i = (i + 1) & mask;
  }
}

std::optional<bool> TranspositionTable::probe(const CanonicalKey& key) const {
  const Slot& s = slots_[find_slot(key)];
  if (!(s.hi & kOccupied)) return std::nullopt;
  return (s.hi & kValue) != 0;
}

void TranspositionTable::store(const CanonicalKey& key, bool maker_wins) {
  if ((size_ + 1) * 2 > slots_.size()) grow();
  Slot& s = slots_[find_slot(key)];
  if (!(s.hi & kOccupied)) ++size_;
  s.lo = key.lo;
  s.hi = key.hi | kOccupied | (maker_wins ? kValue : 0);
}

void TranspositionTable::grow() {
  std::vector<Slot> old = std::move(slots_);
  slots_.assign(old.size() * 2, Slot{});
  for (const Slot& s : old) {
    if (!(s.hi & kOccupied)) continue;
    CanonicalKey k{s.lo, s.hi & ~(kOccupied | kValue)};
    slots_[find_slot(k)] = s;
  }
}

void TranspositionTable::clear() {
  std::fill(slots_.begin(), slots_.end(), Slot{});
  size_ = 0;
}

// ---------------------------------------------------------------------------

namespace {

bool needs_search(const Graph& g, const Ruleset& rules) {
  return g.edge_count() > 0 && rules.k < trivial_bounds(g).upper;
}

}  // namespace

Solver::Solver(std::shared_ptr<const Graph> graph, Ruleset rules, SolverOptions options)
    : graph_(std::move(graph)), rules_(rules), options_(options) {
  const Graph& g = *graph_;
  if (g.edge_count() > kKeyMaxEdges)
    throw CapExceeded("solver: " + std::to_string(g.edge_count()) + " edges exceeds key limit " +
                      std::to_string(kKeyMaxEdges));
  if (!needs_search(g, rules_)) return;
  if (rules_.k > kKeyMaxColors)
    throw CapExceeded("solver: k=" + std::to_string(rules_.k) + " exceeds key limit " +
                      std::to_string(kKeyMaxColors));
  if (options_.cap_override) return;
  if (g.edge_count() > options_.max_edges)
    throw CapExceeded("solver: " + std::to_string(g.edge_count()) + " edges exceeds cap " +
                      std::to_string(options_.max_edges) + " (use the cap override)");
  if (rules_.k > options_.max_colors)
    throw CapExceeded("solver: k=" + std::to_string(rules_.k) + " exceeds cap " +
                      std::to_string(options_.max_colors) + " (use the cap override)");
}

Solver::Solver(const Graph& graph, Ruleset rules, SolverOptions options)
    : Solver(std::make_shared<const Graph>(graph), rules, options) {}

bool Solver::search(GameState& s) {
  if (s.status() == Status::maker_win) return true;
  if (s.status() == Status::breaker_win) return false;
  ++nodes_;
  if (options_.node_budget && nodes_ > options_.node_budget)
    throw CapExceeded("solver: node budget of " + std::to_string(options_.node_budget) +
                      " exhausted");

  const Graph& g = *graph_;
  const int edges = g.edge_count();
  const int k = rules_.k;

  std::array<ColorMask, kKeyMaxEdges> feasible{};
  std::array<int, kKeyMaxEdges> free_count{};
  bool all_safe = true;
  for (EdgeIndex e = 0; e < edges; ++e) {
    if (s.is_colored(e)) continue;
    const ColorMask blocked = s.blocked_mask(e);
    feasible[e] = rules_.palette() & ~blocked;
    if (!feasible[e]) return false;  // this edge can never be colored
    int uncolored_nb = 0;
    for (EdgeIndex f : g.adjacent_edges(e)) uncolored_nb += s.is_colored(f) ? 0 : 1;
    free_count[e] = std::popcount(feasible[e]);
    if (std::popcount(blocked) + uncolored_nb >= k) all_safe = false;
  }
  if (all_safe) return true;

  const CanonicalKey key = canonical_key(s);
  if (auto hit = table_.probe(key)) {
    ++hits_;
    return *hit;
  }

  const bool maker = s.side_to_move() == Side::maker;
  const ColorMask used = s.used_colors();
  const ColorMask fresh = rules_.palette() & ~used;
  const ColorMask fresh_one = fresh & (~fresh + 1);

  // Ordering affects speed only. Breaker: moves that leave a neighbour with
  // no feasible color first, then the most constrained edges. Maker: most
  // constrained edges first, reusing colors before opening a new one.
  struct Candidate {
    int score;
    Move move;
  };
  std::vector<Candidate> moves;
  moves.reserve(static_cast<std::size_t>(edges) * 4);
  for (EdgeIndex e = 0; e < edges; ++e) {
    if (s.is_colored(e)) continue;
    ColorMask options = feasible[e] & (used | fresh_one);
    while (options) {
      const Color c = std::countr_zero(options);
      options &= options - 1;
      const ColorMask bit = ColorMask{1} << c;
      int score = free_count[e] * 4;
      if (maker) {
        score += (bit & used) ? 0 : 1;
      } else {
        int kills = 0;
        for (EdgeIndex f : g.adjacent_edges(e))
          if (!s.is_colored(f) && feasible[f] == bit) ++kills;
        score -= kills * 1000;
        score += (bit & used) ? 1 : 0;
      }
      moves.push_back({score, {e, c}});
    }
  }
  std::stable_sort(moves.begin(), moves.end(),
                   [](const Candidate& a, const Candidate& b) { return a.score < b.score; });

  bool result = !maker;
  for (const Candidate& cand : moves) {
    const auto undo = s.play(cand.move);
    const bool value = search(s);
    s.undo(undo);
    if (maker && value) {
      result = true;
      break;
    }
    if (!maker && !value) {
      result = false;
      break;
    }
  }
  table_.store(key, result);
  return result;
}

bool Solver::maker_wins(const GameState& s) {
  if (&s.graph() != graph_.get() && s.graph().edge_count() != graph_->edge_count())
    throw std::invalid_argument("solver: state belongs to a different graph");
  GameState work = s;
  return search(work);
}

SolveResult Solver::solve() { return solve(GameState(graph_, rules_)); }

SolveResult Solver::solve(const GameState& s) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t nodes0 = nodes_, hits0 = hits_;
  SolveResult r;
  r.maker_wins = maker_wins(s);
  if (!s.is_terminal()) {
    const bool mover_wins = (s.side_to_move() == Side::maker) == r.maker_wins;
    if (mover_wins) r.principal_move = best_move(s);
  }
  r.nodes_expanded = nodes_ - nodes0;
  r.table_hits = hits_ - hits0;
  r.table_size = table_.size();
  r.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Move Solver::best_move(const GameState& s) {
  if (s.is_terminal()) throw IllegalMove("best_move: game is over");
  const auto moves = s.legal_moves();
  if (moves.empty()) throw IllegalMove("best_move: no legal moves");
  const bool value = maker_wins(s);
  GameState work = s;
  for (const Move& mv : moves) {
    const auto undo = work.play(mv);
    const bool child = search(work);
    work.undo(undo);
    if (child == value) return mv;
  }
  return moves.front();  // unreachable: some child always carries the value
}

// ---------------------------------------------------------------------------

SolveResult maker_wins(const Graph& g, Ruleset rules, SolverOptions options) {
  Solver solver(g, rules, options);
  return solver.solve();
}

int game_chromatic_index(const Graph& g, int m, SolverOptions options) {
  if (g.edge_count() == 0) return 0;
  const Bounds b = trivial_bounds(g);
  auto shared = std::make_shared<const Graph>(g);
  for (int k = b.lower; k <= b.upper; ++k) {
    Solver solver(shared, Ruleset(m, k), options);
    if (solver.maker_wins(GameState(shared, Ruleset(m, k)))) return k;
  }
  throw std::logic_error("game_chromatic_index: Maker lost at the trivial upper bound");
}

int WinProfile::index() const {
  for (std::size_t k = 0; k < outcomes.size(); ++k)
    if (outcomes[k]) return static_cast<int>(k);
  return -1;
}

WinProfile win_profile(const Graph& g, int m, SolverOptions options) {
  WinProfile p;
  p.m = m;
  if (g.edge_count() == 0) {
    p.outcomes = {true};
    return p;
  }
  p.bounds = trivial_bounds(g);
  auto shared = std::make_shared<const Graph>(g);
  for (int k = 0; k <= p.bounds.upper; ++k) {
    Solver solver(shared, Ruleset(m, k), options);
    p.outcomes.push_back(solver.maker_wins(GameState(shared, Ruleset(m, k))));
  }
  bool seen_win = false;
  for (bool w : p.outcomes) {
    if (seen_win && !w) p.monotone = false;
    seen_win = seen_win || w;
  }
  return p;
}

Move best_move(const GameState& s, SolverOptions options) {
  Solver solver(s.graph_ptr(), s.rules(), options);
  return solver.best_move(s);
}

std::vector<MonotonicityWitness> scan_monotonicity_counterexamples(
    int m1, int m2, std::span<const Graph> graphs, SolverOptions options) {
  if (m2 < 1 || m1 <= m2) throw std::invalid_argument("scan: need m1 > m2 >= 1");
  std::vector<MonotonicityWitness> out;
  for (const Graph& g : graphs) {
    const int a = game_chromatic_index(g, m1, options);
    const int b = game_chromatic_index(g, m2, options);
    if (a > b) out.push_back({g, a, b});
  }
  return out;
}

std::optional<int> bias_multiplier(int m1, int m2) {
  if (m1 < 1 || m2 < 1) return std::nullopt;
  if ((m1 + 1) % (m2 + 1) != 0) return std::nullopt;
  return (m1 + 1) / (m2 + 1);
}

}  // namespace edgegame
