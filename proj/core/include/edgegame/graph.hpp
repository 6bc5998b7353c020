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

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace edgegame {

using Vertex = int;
using EdgeIndex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool touches(Vertex w) const { return u == w || v == w; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotATree : public GraphError {
 public:
  NotATree() : GraphError("graph is not a tree") {}
};

class NotACaterpillar : public GraphError {
 public:
  NotACaterpillar()
      : GraphError("not a caterpillar: degree>=2 vertices do not induce a path") {}
};

class NotAWheel : public GraphError {
 public:
  NotAWheel() : GraphError("graph is not a wheel") {}
};

class DisconnectedGraph : public GraphError {
 public:
  DisconnectedGraph() : GraphError("graph is disconnected") {}
};

/// Immutable finite simple graph.
///
/// Edges keep the index order they were constructed with; every query that
/// reports edges uses those indices. The edge-adjacency lists (two edges are
/// adjacent when they share an endpoint) are precomputed and sorted, so the
/// line graph is available without further work.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on loops, duplicate edges or out-of-range endpoints.
  Graph(int vertex_count, std::vector<Edge> edges, std::string name = {});

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeIndex e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  /// Edges sharing an endpoint with `e`, ascending.
  std::span<const EdgeIndex> adjacent_edges(EdgeIndex e) const { return edge_adj_[e]; }
  /// Edges incident to `v`, ascending.
  std::span<const EdgeIndex> incident_edges(Vertex v) const { return incident_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const { return neighbors_[v]; }

  int degree(Vertex v) const { return static_cast<int>(incident_[v].size()); }
  int max_degree() const { return max_degree_; }

  bool edges_adjacent(EdgeIndex a, EdgeIndex b) const;
  std::optional<EdgeIndex> find_edge(Vertex u, Vertex v) const;

  bool is_connected() const;
  bool is_tree() const { return edge_count() == vertex_count_ - 1 && is_connected(); }

  const std::string& name() const { return name_; }
  Graph renamed(std::string name) const;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> edge_adj_;
  std::vector<std::vector<EdgeIndex>> incident_;
  std::vector<std::vector<Vertex>> neighbors_;
  int max_degree_ = 0;
  std::string name_;
};

struct Bounds {
  int lower = 0;
  int upper = 0;
};

/// Palette bounds every game index must respect: Maker cannot complete with
/// fewer than the maximum degree colors, and always completes once every edge
/// has more colors than it has neighbours.
/// lower = max degree; upper = max over edges uv of deg(u) + deg(v) - 1.
/// Throws GraphError for an edgeless graph.
Bounds trivial_bounds(const Graph& g);

/// Longest shortest path, counted in edges. Throws DisconnectedGraph.
int diameter(const Graph& g);

/// BFS distances from `source`; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

struct SpineDecomposition {
  std::vector<Vertex> spine_vertices;   // path order, starts at the lower endpoint
  std::vector<EdgeIndex> spine_edges;   // spine_edges[i] joins spine_vertices[i], [i+1]
  std::vector<EdgeIndex> leg_edges;     // ascending
};

/// Throws NotATree, NotACaterpillar, or GraphError for fewer than two edges.
SpineDecomposition spine(const Graph& g);

/// Hub plus spokes and rim edges in cyclic order. rim[i] joins the rim
/// endpoints of spokes[i] and spokes[(i + 1) % n].
struct WheelLayout {
  Vertex hub = 0;
  std::vector<Vertex> rim_vertices;
  std::vector<EdgeIndex> spokes;
  std::vector<EdgeIndex> rim;

  int size() const { return static_cast<int>(spokes.size()); }
};

/// Throws NotAWheel.
WheelLayout wheel_layout(const Graph& g);

}  // namespace edgegame
