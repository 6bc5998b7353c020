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
#include <deque>

#include "edgegame/strategy.hpp"

namespace edgegame {

std::vector<EdgeIndex> RootedOrientation::path_to(EdgeIndex e) const {
  std::vector<EdgeIndex> path;
  for (Vertex v = head_of[e]; parent_arc[v] >= 0; v = parent[v]) path.push_back(parent_arc[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

RootedOrientation orient_from_lowest_leaf(const Graph& tree) {
  if (!tree.is_tree() || tree.edge_count() == 0) throw NotATree();
  RootedOrientation o;
  const int n = tree.vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    if (tree.degree(v) == 1) {
      o.root = v;
      break;
    }
  }
  o.parent.assign(n, -1);
  o.parent_arc.assign(n, -1);
  o.depth.assign(n, 0);
  o.head_of.assign(tree.edge_count(), -1);
  o.arc_depth.assign(tree.edge_count(), 0);
  std::deque<Vertex> queue{o.root};
  std::vector<bool> seen(n);
  seen[o.root] = true;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (EdgeIndex e : tree.incident_edges(v)) {
      Vertex w = tree.edge(e).other(v);
      if (seen[w]) continue;
      seen[w] = true;
      o.parent[w] = v;
      o.parent_arc[w] = e;
      o.depth[w] = o.depth[v] + 1;
      o.head_of[e] = w;
      o.arc_depth[e] = o.depth[w];
      queue.push_back(w);
    }
  }
  o.first_arc = tree.incident_edges(o.root).front();
  return o;
}

namespace {

Ruleset checked_tree_rules(const Graph& g, Ruleset rules, const TreeStrategyOptions& options) {
  if (!g.is_tree() || g.edge_count() == 0) throw StrategyError("tree strategy needs a tree");
  const int delta = g.max_degree();
  if (options.variant == TreeVariant::standard) {
    if (rules.k < delta + 2)
      throw StrategyError("tree strategy needs k >= max degree + 2 = " + std::to_string(delta + 2));
  } else {
    if (rules.k < delta + 1)
      throw StrategyError("fastfill strategy needs k >= max degree + 1 = " +
                          std::to_string(delta + 1));
    const int need = diameter(g) - 2;
    if (rules.m < need)
      throw StrategyError("fastfill strategy needs m >= diameter - 2 = " + std::to_string(need));
  }
  return rules;
}

}  // namespace

TreeMakerStrategy::TreeMakerStrategy(std::shared_ptr<const Graph> tree, Ruleset rules,
                                     TreeStrategyOptions options)
    : tree_(std::move(tree)),
      rules_(checked_tree_rules(*tree_, rules, options)),
      options_(options),
      orient_(orient_from_lowest_leaf(*tree_)) {
  marked_.contains.assign(tree_->edge_count(), false);
  marked_.colored.assign(tree_->edge_count(), false);
}

std::string_view TreeMakerStrategy::name() const {
  return options_.variant == TreeVariant::standard ? "tree" : "tree-fastfill";
}

std::unique_ptr<MakerStrategy> TreeMakerStrategy::clone() const {
  return std::make_unique<TreeMakerStrategy>(*this);
}

std::uint64_t TreeMakerStrategy::memory_fingerprint() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (bool b : marked_.contains) h = (h ^ (b ? 0x9e : 0x37)) * 0x100000001b3ULL;
  return h;
}

std::vector<EdgeIndex> TreeMakerStrategy::by_depth(std::vector<EdgeIndex> arcs) const {
  std::stable_sort(arcs.begin(), arcs.end(), [&](EdgeIndex a, EdgeIndex b) {
    return std::pair(orient_.arc_depth[a], a) < std::pair(orient_.arc_depth[b], b);
  });
  return arcs;
}

void TreeMakerStrategy::opening_turn(TurnBuilder& turn) {
  // BFS over arcs starting at u1u2; the first m arcs form a subtree.
  std::deque<EdgeIndex> queue{orient_.first_arc};
  while (!queue.empty() && turn.open()) {
    const EdgeIndex e = queue.front();
    queue.pop_front();
    if (turn.color_lowest(e, "opening-subtree")) marked_.contains[e] = true;
    const Vertex head = orient_.head(e);
    for (EdgeIndex f : tree_->incident_edges(head))
      if (f != e) queue.push_back(f);
  }
}

void TreeMakerStrategy::fill_and_extend(TurnBuilder& turn) {
  while (turn.open()) {
    std::vector<EdgeIndex> pending;
    for (EdgeIndex e = 0; e < tree_->edge_count(); ++e)
      if (marked_.has(e) && !turn.state().is_colored(e) && e != held_back_) pending.push_back(e);
    bool progressed = false;
    for (EdgeIndex e : by_depth(pending)) {
      if (turn.color_lowest(e, "fill-subtree")) {
        progressed = true;
        break;
      }
    }
    if (progressed) continue;

    // Every arc of the subtree is colored: grow it by an arc hanging off it.
    std::vector<EdgeIndex> frontier;
    for (EdgeIndex e = 0; e < tree_->edge_count(); ++e) {
      if (marked_.has(e)) continue;
      const Vertex tail = orient_.parent[orient_.head(e)];
      const EdgeIndex up = orient_.parent_arc[tail];
      if (up >= 0 && marked_.has(up)) frontier.push_back(e);
    }
    for (EdgeIndex e : by_depth(frontier)) {
      if (turn.color_lowest(e, "extend-subtree")) {
        marked_.contains[e] = true;
        progressed = true;
        break;
      }
    }
    if (!progressed) break;
  }
}

void TreeMakerStrategy::standard_turn(TurnBuilder& turn, EdgeIndex breaker_arc) {
  const auto path = orient_.path_to(breaker_arc);
  EdgeIndex join = orient_.first_arc;
  for (EdgeIndex e : path)
    if (marked_.has(e)) join = e;
  for (EdgeIndex e : path) marked_.contains[e] = true;
  if (options_.skip_join_arc) {
    held_back_ = join;
  } else {
    turn.color_lowest(join, "join-arc-first");
  }
  fill_and_extend(turn);
  held_back_ = -1;
}

void TreeMakerStrategy::extend_colored(TurnBuilder& turn) {
  while (turn.open()) {
    std::vector<EdgeIndex> frontier;
    for (EdgeIndex e = 0; e < tree_->edge_count(); ++e) {
      if (turn.state().is_colored(e)) continue;
      const Vertex tail = orient_.parent[orient_.head(e)];
      const EdgeIndex up = orient_.parent_arc[tail];
      if (up < 0 || turn.state().is_colored(up)) frontier.push_back(e);
    }
    bool progressed = false;
    for (EdgeIndex e : by_depth(frontier)) {
      if (turn.color_lowest(e, "extend-colored")) {
        marked_.contains[e] = true;
        progressed = true;
        break;
      }
    }
    if (!progressed) break;
  }
}

void TreeMakerStrategy::fastfill_turn(TurnBuilder& turn, EdgeIndex breaker_arc) {
  const auto path = orient_.path_to(breaker_arc);
  for (EdgeIndex e : path) marked_.contains[e] = true;
  // Arcs strictly between u1u2 and Breaker's arc, root side first.
  for (std::size_t i = 1; i + 1 < path.size(); ++i) turn.color_lowest(path[i], "fastfill-path");
  extend_colored(turn);
}

std::vector<PlannedMove> TreeMakerStrategy::plan_turn(const GameState& s) {
  TurnBuilder turn(s);
  const auto breaker = opponent_edges(s);
  if (!started_) {
    started_ = true;
    opening_turn(turn);
  } else {
    if (breaker.empty()) {
      fill_and_extend(turn);
    } else if (options_.variant == TreeVariant::standard) {
      standard_turn(turn, breaker.front());
    } else {
      fastfill_turn(turn, breaker.front());
    }
  }
  if (turn.open()) {
    // Only reachable if the scripted rules run out of candidates; any legal
    // move keeps the turn well-formed and is tagged so traces show it.
    for (EdgeIndex e = 0; e < tree_->edge_count() && turn.open(); ++e) {
      if (turn.color_lowest(e, "fallback")) marked_.contains[e] = true;
    }
  }
  remember(turn.state());
  for (EdgeIndex e = 0; e < tree_->edge_count(); ++e)
    marked_.colored[e] = turn.state().is_colored(e);
  return turn.finish();
}

void TreeMakerStrategy::check_invariants(const GameState& s) const {
  const Graph& t = *tree_;
  if (!marked_.has(orient_.first_arc)) throw InvariantViolation("subtree lost the first arc");
  for (EdgeIndex e = 0; e < t.edge_count(); ++e) {
    if (!marked_.has(e)) continue;
    const Vertex tail = orient_.parent[orient_.head(e)];
    const EdgeIndex up = orient_.parent_arc[tail];
    if (up >= 0 && !marked_.has(up))
      throw InvariantViolation("subtree is not closed towards the root at arc " + std::to_string(e));
  }
  if (options_.variant == TreeVariant::fastfill) {
    for (EdgeIndex e = 0; e < t.edge_count(); ++e) {
      if (!s.is_colored(e)) continue;
      const EdgeIndex up = orient_.parent_arc[orient_.parent[orient_.head(e)]];
      if (up >= 0 && !s.is_colored(up))
        throw InvariantViolation("colored arc " + std::to_string(e) + " below an uncolored arc");
    }
    return;
  }
  for (EdgeIndex e = 0; e < t.edge_count(); ++e) {
    if (s.is_colored(e) && !marked_.has(e))
      throw InvariantViolation("invariant #1: colored arc " + std::to_string(e) + " outside subtree");
    if (!marked_.has(e) || s.is_colored(e)) continue;
    int children_in_tree = 0;
    const Vertex head = orient_.head(e);
    for (EdgeIndex f : t.incident_edges(head))
      if (f != e && marked_.has(f)) ++children_in_tree;
    if (children_in_tree >= 2)
      throw InvariantViolation("invariant #2: arc " + std::to_string(e) +
                               " has two subtree children but is uncolored");
  }
}

}  // namespace edgegame
