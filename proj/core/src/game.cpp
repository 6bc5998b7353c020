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

#include "edgegame/game.hpp"

#include <algorithm>
#include <cassert>

namespace edgegame {

std::string_view to_string(Side s) { return s == Side::maker ? "maker" : "breaker"; }

std::string_view to_string(Status s) {
  switch (s) {
    case Status::ongoing: return "ongoing";
    case Status::maker_win: return "maker_win";
    case Status::breaker_win: return "breaker_win";
  }
  return "?";
}

Ruleset::Ruleset(int m_, int k_) : m(m_), k(k_) {
  if (m < 1) throw RulesError("m must be >= 1");
  if (k < 0 || k > kMaxPalette)
    throw RulesError("k must be in 0.." + std::to_string(kMaxPalette));
}

std::vector<Color> colors_in(ColorMask mask) {
  std::vector<Color> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

GameState::GameState(std::shared_ptr<const Graph> graph, Ruleset rules)
    : graph_(std::move(graph)), rules_(rules) {
  if (!graph_) throw std::invalid_argument("GameState: null graph");
  if (rules_.m < 1 || rules_.k < 0 || rules_.k > kMaxPalette)
    throw RulesError("GameState: invalid ruleset");
  colors_.assign(graph_->edge_count(), kUncolored);
  if (graph_->edge_count() == 0) {
    status_ = Status::maker_win;
    return;
  }
  submoves_left_ = std::min(rules_.m, graph_->edge_count());
  if (!has_legal_move()) {
    status_ = Status::breaker_win;
    submoves_left_ = 0;
  }
}

ColorMask GameState::blocked_mask(EdgeIndex e) const {
  ColorMask mask = 0;
  for (EdgeIndex f : graph_->adjacent_edges(e)) {
    const auto c = colors_[f];
    if (c != kUncolored) mask |= ColorMask{1} << c;
  }
  return mask;
}

std::vector<Color> GameState::feasible_colors(EdgeIndex e) const {
  if (e < 0 || e >= graph_->edge_count()) throw IllegalMove("edge index out of range");
  if (is_colored(e)) throw IllegalMove("edge " + std::to_string(e) + " is already colored");
  return colors_in(feasible_mask(e));
}

ColorMask GameState::used_colors() const {
  ColorMask mask = 0;
  for (auto c : colors_)
    if (c != kUncolored) mask |= ColorMask{1} << c;
  return mask;
}

bool GameState::is_legal(const Move& mv) const {
  if (status_ != Status::ongoing) return false;
  if (mv.edge < 0 || mv.edge >= graph_->edge_count()) return false;
  if (mv.color < 0 || mv.color >= rules_.k) return false;
  if (is_colored(mv.edge)) return false;
  return (feasible_mask(mv.edge) >> mv.color) & 1;
}

std::vector<Move> GameState::legal_moves() const {
  std::vector<Move> out;
  if (status_ != Status::ongoing) return out;
  for (EdgeIndex e = 0; e < graph_->edge_count(); ++e) {
    if (is_colored(e)) continue;
    for (Color c : colors_in(feasible_mask(e))) out.push_back({e, c});
  }
  return out;
}

bool GameState::has_legal_move() const {
  for (EdgeIndex e = 0; e < graph_->edge_count(); ++e)
    if (!is_colored(e) && feasible_mask(e) != 0) return true;
  return false;
}

GameState::Undo GameState::play(const Move& mv) {
  assert(is_legal(mv));
  Undo u{mv.edge, side_, submoves_left_, status_};
  const Side mover = side_;
  colors_[mv.edge] = static_cast<std::int8_t>(mv.color);
  ++colored_;
  settle_after_move(mover);
  return u;
}

void GameState::settle_after_move(Side mover) {
  const int remaining = uncolored_count();
  if (remaining == 0) {
    status_ = Status::maker_win;
    submoves_left_ = 0;
    return;
  }
  if (mover == Side::maker && submoves_left_ > 1) {
    --submoves_left_;
  } else if (mover == Side::maker) {
    side_ = Side::breaker;
    submoves_left_ = 0;
  } else {
    side_ = Side::maker;
    submoves_left_ = std::min(rules_.m, remaining);
  }
  if (!has_legal_move()) {
    status_ = Status::breaker_win;
    submoves_left_ = 0;
  }
}

void GameState::undo(const Undo& u) {
  colors_[u.edge] = kUncolored;
  --colored_;
  side_ = u.side;
  submoves_left_ = u.submoves_left;
  status_ = u.status;
}

void GameState::apply(const Move& mv) {
  if (status_ != Status::ongoing) throw IllegalMove("game is over");
  if (mv.edge < 0 || mv.edge >= graph_->edge_count())
    throw IllegalMove("edge index " + std::to_string(mv.edge) + " out of range");
  if (is_colored(mv.edge)) throw IllegalMove("edge " + std::to_string(mv.edge) + " is already colored");
  if (mv.color < 0 || mv.color >= rules_.k)
    throw IllegalMove("color " + std::to_string(mv.color) + " outside palette");
  if (!((feasible_mask(mv.edge) >> mv.color) & 1))
    throw IllegalMove("color " + std::to_string(mv.color) + " is used on an edge adjacent to " +
                      std::to_string(mv.edge));
  play(mv);
}

bool GameState::coloring_is_proper() const {
  for (EdgeIndex e = 0; e < graph_->edge_count(); ++e) {
    if (!is_colored(e)) continue;
    for (EdgeIndex f : graph_->adjacent_edges(e))
      if (colors_[f] == colors_[e]) return false;
  }
  return true;
}

GameState new_game(std::shared_ptr<const Graph> graph, Ruleset rules) {
  return GameState(std::move(graph), rules);
}

GameState new_game(const Graph& graph, Ruleset rules) {
  return GameState(std::make_shared<const Graph>(graph), rules);
}

GameState apply_move(const GameState& s, const Move& mv) {
  GameState next = s;
  next.apply(mv);
  return next;
}

GameState replay(std::shared_ptr<const Graph> graph, Ruleset rules, std::span<const Move> moves) {
  GameState s(std::move(graph), rules);
  for (std::size_t i = 0; i < moves.size(); ++i) {
    try {
      s.apply(moves[i]);
    } catch (const IllegalMove& ex) {
      throw ReplayError(i, ex.what());
    }
  }
  return s;
}

}  // namespace edgegame
