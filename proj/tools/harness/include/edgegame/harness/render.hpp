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

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "edgegame/game.hpp"
#include "edgegame/graph.hpp"
#include "edgegame/harness/report.hpp"
#include "edgegame/solver.hpp"

namespace edgegame::harness {

/// Loads `spec` as a graph file if it names one, otherwise as a family
/// spec: `path:N`, `cycle:N`, `star:T`, `wheel:N`, `caterpillar:L:a,b,...`.
/// Throws GraphError.
Graph load_graph(std::string_view spec);

/// Edge labels for text output. Wheels use s1..sn / r1..rn in the
/// generator numbering; other graphs use e<index>.
class EdgeNames {
 public:
  explicit EdgeNames(const Graph& g);
  std::string operator()(EdgeIndex e) const;

 private:
  const Graph* graph_;
  std::optional<WheelLayout> wheel_;
};

std::string render_state(const GameState& s);
std::string describe_graph(const Graph& g);

Json solve_json(const Graph& g, const Ruleset& rules, const SolveResult& r);

}  // namespace edgegame::harness
