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

#include "edgegame/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

namespace edgegame {

Graph::Graph(int vertex_count, std::vector<Edge> edges, std::string name)
    : vertex_count_(vertex_count), edges_(std::move(edges)), name_(std::move(name)) {
  if (vertex_count_ < 0) throw GraphError("negative vertex count");
  incident_.assign(vertex_count_, {});
  neighbors_.assign(vertex_count_, {});
  std::set<std::pair<Vertex, Vertex>> seen;
  for (EdgeIndex e = 0; e < edge_count(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.u < 0 || ed.v < 0 || ed.u >= vertex_count_ || ed.v >= vertex_count_)
      throw GraphError("edge " + std::to_string(e) + " has an endpoint out of range");
    if (ed.u == ed.v) throw GraphError("edge " + std::to_string(e) + " is a loop");
    if (!seen.emplace(std::min(ed.u, ed.v), std::max(ed.u, ed.v)).second)
      throw GraphError("edge " + std::to_string(e) + " duplicates an earlier edge");
    incident_[ed.u].push_back(e);
    incident_[ed.v].push_back(e);
    neighbors_[ed.u].push_back(ed.v);
    neighbors_[ed.v].push_back(ed.u);
  }
  for (auto& n : neighbors_) std::sort(n.begin(), n.end());

  edge_adj_.assign(edges_.size(), {});
  for (EdgeIndex e = 0; e < edge_count(); ++e) {
    auto& adj = edge_adj_[e];
    for (Vertex w : {edges_[e].u, edges_[e].v})
      for (EdgeIndex f : incident_[w])
        if (f != e) adj.push_back(f);
    std::sort(adj.begin(), adj.end());
  }
  for (const auto& inc : incident_)
    max_degree_ = std::max(max_degree_, static_cast<int>(inc.size()));
}

bool Graph::edges_adjacent(EdgeIndex a, EdgeIndex b) const {
  const auto& adj = edge_adj_[a];
  return std::binary_search(adj.begin(), adj.end(), b);
}

std::optional<EdgeIndex> Graph::find_edge(Vertex u, Vertex v) const {
  if (u < 0 || u >= vertex_count_) return std::nullopt;
  for (EdgeIndex e : incident_[u])
    if (edges_[e].other(u) == v) return e;
  return std::nullopt;
}

bool Graph::is_connected() const {
  if (vertex_count_ <= 1) return true;
  auto dist = bfs_distances(*this, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

Graph Graph::renamed(std::string name) const {
  Graph g = *this;
  g.name_ = std::move(name);
  return g;
}

Bounds trivial_bounds(const Graph& g) {
  if (g.edge_count() == 0) throw GraphError("trivial_bounds: graph has no edges");
  Bounds b{g.max_degree(), 0};
  for (const Edge& e : g.edges())
    b.upper = std::max(b.upper, g.degree(e.u) + g.degree(e.v) - 1);
  return b;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

int diameter(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (int d : bfs_distances(g, v)) {
      if (d < 0) throw DisconnectedGraph();
      best = std::max(best, d);
    }
  }
  return best;
}

SpineDecomposition spine(const Graph& g) {
  if (!g.is_tree()) throw NotATree();
  if (g.edge_count() < 2) throw GraphError("spine: need at least two edges");

  std::vector<bool> on_spine(g.vertex_count());
  std::vector<Vertex> inner;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) >= 2) {
      on_spine[v] = true;
      inner.push_back(v);
    }
  }
  // In a tree the induced subgraph on `inner` is a forest; it is connected
  // (removing leaves keeps a tree), so it is a path iff every spine degree <= 2.
  auto spine_degree = [&](Vertex v) {
    int d = 0;
    for (Vertex w : g.neighbors(v)) d += on_spine[w] ? 1 : 0;
    return d;
  };
  Vertex start = -1;
  for (Vertex v : inner) {
    int d = spine_degree(v);
    if (d > 2) throw NotACaterpillar();
    if (d <= 1 && start < 0) start = v;
  }
  if (start < 0) throw NotACaterpillar();

  SpineDecomposition out;
  Vertex prev = -1, cur = start;
  while (true) {
    out.spine_vertices.push_back(cur);
    Vertex next = -1;
    for (Vertex w : g.neighbors(cur))
      if (on_spine[w] && w != prev) next = w;
    if (next < 0) break;
    out.spine_edges.push_back(*g.find_edge(cur, next));
    prev = cur;
    cur = next;
  }
  if (out.spine_vertices.size() != inner.size()) throw NotACaterpillar();

  std::vector<bool> is_spine_edge(g.edge_count());
  for (EdgeIndex e : out.spine_edges) is_spine_edge[e] = true;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    if (!is_spine_edge[e]) out.leg_edges.push_back(e);
  return out;
}

WheelLayout wheel_layout(const Graph& g) {
  const int n = g.vertex_count() - 1;
  if (n < 3 || g.edge_count() != 2 * n) throw NotAWheel();
  Vertex hub = -1;
  for (Vertex v = 0; v <= n; ++v) {
    if (g.degree(v) == n) {
      hub = v;
      break;
    }
  }
  if (hub < 0) throw NotAWheel();

  // Rim: every other vertex must have exactly two non-hub neighbours, and
  // those must form a single cycle.
  auto rim_neighbors = [&](Vertex v) {
    std::vector<Vertex> out;
    for (Vertex w : g.neighbors(v))
      if (w != hub) out.push_back(w);
    return out;
  };
  Vertex first = hub == 0 ? 1 : 0;
  for (Vertex v = 0; v <= n; ++v)
    if (v != hub && rim_neighbors(v).size() != 2) throw NotAWheel();

  WheelLayout layout;
  layout.hub = hub;
  Vertex prev = -1, cur = first;
  for (int i = 0; i < n; ++i) {
    layout.rim_vertices.push_back(cur);
    auto rn = rim_neighbors(cur);
    Vertex next = prev < 0 ? std::min(rn[0], rn[1]) : (rn[0] == prev ? rn[1] : rn[0]);
    prev = cur;
    cur = next;
  }
  if (cur != first) throw NotAWheel();
  std::vector<Vertex> sorted = layout.rim_vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw NotAWheel();

  for (int i = 0; i < n; ++i) {
    Vertex a = layout.rim_vertices[i];
    Vertex b = layout.rim_vertices[(i + 1) % n];
    layout.spokes.push_back(*g.find_edge(hub, a));
    auto r = g.find_edge(a, b);
    if (!r) throw NotAWheel();
    layout.rim.push_back(*r);
  }
  return layout;
}

}  // namespace edgegame
