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

#include <string>
#include <vector>

#include "edgegame/graph.hpp"

namespace edgegame {

inline constexpr int kMaxTreeEdges = 12;
inline constexpr int kMaxConnectedGraphEdges = 7;

/// One representative per isomorphism class of trees with 1..max_edges
/// edges, ordered by edge count and then by canonical form. Throws
/// GraphError beyond kMaxTreeEdges.
///
/// Representatives are numbered from their canonical root (vertex 0) in
/// preorder; edge i joins vertex i+1 to its parent.
std::vector<Graph> enumerate_trees(int max_edges);

/// One representative per isomorphism class of connected graphs with
/// 1..max_edges edges (no isolated vertices). Throws beyond
/// kMaxConnectedGraphEdges.
std::vector<Graph> enumerate_connected_graphs(int max_edges);

/// Isomorphism-invariant encoding of a tree (center-rooted AHU string).
std::string tree_canonical_form(const Graph& tree);

/// Isomorphism-invariant encoding of a small graph, by minimising the sorted
/// edge list over all degree-respecting vertex relabelings. Intended for
/// graphs with at most ~9 vertices.
std::vector<Edge> graph_canonical_form(const Graph& g);

}  // namespace edgegame
